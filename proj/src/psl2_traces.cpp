#include "hurwitz/psl2_traces.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "hurwitz/error.hpp"
#include "hurwitz/numtheory.hpp"

namespace hurwitz::psl2 {

namespace {

void require_odd_prime(int p) {
  if (p < 3 || !nt::is_prime(p)) throw Error(ErrorKind::precondition, "p must be an odd prime, got " + std::to_string(p));
}

std::vector<std::uint32_t> scan_orders(int p) {
  using M = std::array<std::int64_t, 4>;
  auto mul = [p](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
             (x[2] * y[1] + x[3] * y[3]) % p};
  };
  auto central = [p](const M& x) { return x[1] == 0 && x[2] == 0 && (x[0] == 1 || x[0] == p - 1) && x[0] == x[3]; };
  std::vector<std::uint32_t> ord(p, 0);
  auto visit = [&](const M& m) {
    if (central(m)) return;
    std::uint32_t k = 1;
    for (M x = m; !central(x); x = mul(x, m)) ++k;
    const auto tr = static_cast<std::size_t>((m[0] + m[3]) % p);
    if (ord[tr] != 0 && ord[tr] != k) {
      throw Error(ErrorKind::precondition, "trace " + std::to_string(tr) + " carries two orders");
    }
    ord[tr] = k;
  };
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t c = 0; c < p; ++c) {
        if (a != 0) {
          // d = (1 + bc) / a
          const std::int64_t inv_a = [&] {
            std::int64_t r = 1, base = a, e = p - 2;
            while (e > 0) {
              if (e & 1) r = r * base % p;
              base = base * base % p;
              e >>= 1;
            }
            return r;
          }();
          visit(M{a, b, c, (1 + b * c) % p * inv_a % p});
        } else if ((b * c) % p == p - 1) {
          for (std::int64_t d = 0; d < p; ++d) visit(M{a, b, c, d});
        }
      }
    }
  }
  return ord;
}

std::uint64_t phi(std::uint32_t n) { return static_cast<std::uint64_t>(nt::euler_phi(n)); }

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

void require_hypotheses(int p, const Triple& t) {
  require_odd_prime(p);
  if (t[0] < 2 || t[1] <= 2 || t[2] <= 5) {
    throw Error(ErrorKind::hypothesis_violation,
                "need 2 <= l <= m <= n with m > 2 and n > 5; use the brute-force count instead");
  }
}

std::vector<int> traces_of(const std::vector<std::uint32_t>& ord, std::uint32_t l) {
  std::vector<int> out;
  for (std::size_t a = 0; a < ord.size(); ++a) {
    if (ord[a] == l) out.push_back(static_cast<int>(a));
  }
  return out;
}

bool singular(int p, std::int64_t a, std::int64_t b, std::int64_t c) {
  return nt::mod(a * a + b * b + c * c - a * b * c, p) == 4 % p;
}

// Positions i < j of equal order may be swapped.
std::vector<std::array<int, 3>> position_symmetries(const Triple& t) {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (t[perm[0]] == t[0] && t[perm[1]] == t[1] && t[perm[2]] == t[2]) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<std::uint32_t> trace_orders(int p) {
  require_odd_prime(p);
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint32_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  auto ord = scan_orders(p);
  std::lock_guard lock(mutex);
  return cache.emplace(p, std::move(ord)).first->second;
}

TraceSet trace_set(int p, std::uint32_t l) {
  require_odd_prime(p);
  if (l < 2) throw Error(ErrorKind::precondition, "order must be at least 2");
  return TraceSet{p, l, traces_of(trace_orders(p), l)};
}

std::uint64_t trace_set_size_formula(int p, std::uint32_t l) {
  require_odd_prime(p);
  if (l == static_cast<std::uint32_t>(p)) return 2;
  if (l == 2) return 1;
  const auto lo = static_cast<std::uint32_t>((p - 1) / 2), hi = static_cast<std::uint32_t>((p + 1) / 2);
  if (l >= 3 && (lo % l == 0 || hi % l == 0)) return phi(l);
  return 0;
}

std::uint64_t d_prime(int p, Triple triple) {
  triple = sorted(triple);
  require_hypotheses(p, triple);
  const auto ord = trace_orders(p);
  auto reps = [&](std::uint32_t l) {
    std::vector<int> out;
    for (int a : traces_of(ord, l)) {
      if (a <= (p - 1) / 2) out.push_back(a);
    }
    return out;
  };
  // Each class has one representative with all entries in 0..(p-1)/2; equal
  // orders are then sorted.
  std::set<std::array<int, 3>> classes;
  for (int a : reps(triple[0])) {
    for (int b : reps(triple[1])) {
      for (int c : reps(triple[2])) {
        std::array<int, 3> key{a, b, c};
        if (triple[0] == triple[1]) std::sort(key.begin(), key.begin() + 2);
        if (triple[1] == triple[2]) std::sort(key.begin() + 1, key.end());
        if (triple[0] == triple[1]) std::sort(key.begin(), key.begin() + 2);
        const bool minus_ok = !singular(p, a, b, c);
        const bool plus_ok = !singular(p, a, b, p - c);
        if (minus_ok || plus_ok) classes.insert(key);
      }
    }
  }
  return classes.size();
}

std::uint64_t d_prime_even_sign(int p, Triple triple) {
  triple = sorted(triple);
  require_hypotheses(p, triple);
  const auto ord = trace_orders(p);
  const auto sym = position_symmetries(triple);
  static constexpr std::array<std::array<int, 3>, 4> kEvenSigns{{{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  std::set<std::array<int, 3>> classes;
  for (int a : traces_of(ord, triple[0])) {
    for (int b : traces_of(ord, triple[1])) {
      for (int c : traces_of(ord, triple[2])) {
        if (singular(p, a, b, c)) continue;
        const std::array<int, 3> t{a, b, c};
        std::array<int, 3> best{p, p, p};
        for (const auto& s : kEvenSigns) {
          for (const auto& perm : sym) {
            std::array<int, 3> img{};
            for (int i = 0; i < 3; ++i) img[i] = static_cast<int>(nt::mod(s[i] * t[perm[i]], p));
            best = std::min(best, img);
          }
        }
        classes.insert(best);
      }
    }
  }
  return classes.size();
}

ClosedForm d_prime_closed(int p, Triple triple) {
  require_odd_prime(p);
  triple = sorted(triple);
  const auto [l, m, n] = triple;
  const auto up = static_cast<std::uint32_t>(p);
  const auto lo = static_cast<std::uint32_t>((p - 1) / 2), hi = static_cast<std::uint32_t>((p + 1) / 2);
  auto divides_half = [&](std::uint32_t r) { return lo % r == 0 || hi % r == 0; };
  if (triple == Triple{2, 3, up}) return {1, "i", false};
  if (l == 2 && m == 3 && n >= 7 && divides_half(n)) return {phi(n) / 2, "ii", false};
  if (l == up && m == up && n == up) return {1, "iii", false};
  if (l == m && m == n && n >= 7 && divides_half(n)) {
    const auto psi = phi(n) / 2;
    return {psi * (psi + 1) * (psi + 2) / 6, "iv", false};
  }
  const auto bound = phi(l) * phi(m) * phi(n) / 8;
  if (2 < l && l < m && m < n && n > 5 && divides_half(l) && divides_half(m) && divides_half(n)) {
    return {bound, "v", false};
  }
  return {bound, "vi", true};
}

std::uint64_t h_upper_bound(Triple tau1, Triple tau2) {
  for (const auto& t : {tau1, tau2}) {
    if (!is_hyperbolic(t[0], t[1], t[2])) {
      throw Error(ErrorKind::non_hyperbolic, "type (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                                 std::to_string(t[2]) + ") is not hyperbolic");
    }
  }
  std::uint64_t prod = 1;
  for (const auto& t : {tau1, tau2}) {
    for (auto r : t) prod *= phi(r);
  }
  return prod / 16;
}

bool order_six_exclusion_holds(int p) {
  const auto ord = trace_orders(p);
  for (int g = 0; g < p; ++g) {
    const bool square_is_three = nt::mod(static_cast<std::int64_t>(g) * g - 3, p) == 0;
    if (square_is_three != (ord[g] == 6)) return false;
  }
  return true;
}

std::vector<Triple> admissible_triples(int p, std::uint32_t max_order) {
  const auto ord = trace_orders(p);
  std::set<std::uint32_t> orders(ord.begin(), ord.end());
  std::vector<std::uint32_t> ok;
  for (auto o : orders) {
    if (o >= 2 && o <= max_order) ok.push_back(o);
  }
  std::vector<Triple> out;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = i; j < ok.size(); ++j) {
      for (std::size_t k = j; k < ok.size(); ++k) {
        if (ok[j] > 2 && ok[k] > 5) out.push_back({ok[i], ok[j], ok[k]});
      }
    }
  }
  return out;
}

}  // namespace hurwitz::psl2
