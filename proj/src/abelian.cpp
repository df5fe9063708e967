#include "hurwitz/abelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hurwitz/error.hpp"
#include "hurwitz/numtheory.hpp"

namespace hurwitz::abelian {

namespace {

bool unit(std::int64_t x, std::int64_t p) { return nt::mod(x, p) != 0; }

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

AbelianProfile::AbelianProfile(std::vector<std::int64_t> f) {
  for (auto n : f) {
    if (n < 1) throw Error(ErrorKind::invalid_spec, "invariant factors must be positive");
    if (n > 1) factors.push_back(n);
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] % factors[i - 1] != 0) throw Error(ErrorKind::invalid_spec, "broken divisibility chain");
  }
}

int AbelianProfile::l(std::size_t i, std::int64_t p) const {
  if (i < 1 || i > factors.size()) return 0;
  return nt::valuation(factors[i - 1], p);
}

std::int64_t AbelianProfile::order() const {
  return std::accumulate(factors.begin(), factors.end(), std::int64_t{1}, std::multiplies<>());
}

std::vector<std::vector<std::int64_t>> groups_of_order(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> chain;  // n_t, n_{t-1}, ... each dividing the previous
  std::function<void(std::int64_t)> rec = [&](std::int64_t remaining) {
    if (remaining == 1) {
      out.emplace_back(chain.rbegin(), chain.rend());
      return;
    }
    const auto bound = chain.empty() ? remaining : chain.back();
    for (std::int64_t d = 2; d <= bound; ++d) {
      if (bound % d != 0 || remaining % d != 0) continue;
      chain.push_back(d);
      rec(remaining / d);
      chain.pop_back();
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

Admission admits_structure(const AbelianProfile& g, std::size_t r1, std::size_t r2) {
  if (r1 < 3 || r2 < 3) throw Error(ErrorKind::precondition, "sizes must be at least 3");
  const std::size_t t = g.rank();
  if (t == 0) return {false, "the trivial group has no spherical systems"};
  if (r1 < t + 1 || r2 < t + 1) return {false, "r1, r2 >= t+1"};
  if (t == 1) return {false, "G_p is not cyclic"};
  if (g.factors[t - 1] != g.factors[t - 2]) return {false, "n_t = n_{t-1}"};
  if (g.l(t - 1, 3) > g.l(t - 2, 3) && (r1 < 4 || r2 < 4)) return {false, "r1, r2 >= 4 (3-part of rank 2)"};
  if (g.l(t - 1, 2) != g.l(t - 2, 2)) return {false, "l_{t-1}(2) = l_{t-2}(2)"};
  if (g.l(t - 2, 2) > g.l(t - 3, 2)) {
    if (r1 < 5 || r2 < 5) return {false, "r1, r2 >= 5 (2-part of rank 3)"};
    if (r1 % 2 == 1 && r2 % 2 == 1) return {false, "r1, r2 are not both odd"};
  }
  return {true, ""};
}

NpResult count_Np(std::int64_t p) {
  if (p < 5) throw Error(ErrorKind::p_too_small, "need p >= 5, got " + std::to_string(p));
  if (!nt::is_prime(p)) throw Error(ErrorKind::precondition, std::to_string(p) + " is not prime");
  NpResult out;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      for (std::int64_t c = 1; c < p; ++c) {
        for (std::int64_t d = 1; d < p; ++d) {
          if (unit(a - b, p) && unit(a + c, p) && unit(c - d, p) && unit(b + d, p) && unit(a + c - b - d, p) &&
              unit(a * d - b * c, p)) {
            out.quadruples.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  out.count = out.quadruples.size();
  return out;
}

std::uint64_t Np_formula(std::int64_t p) {
  const auto q = static_cast<std::uint64_t>(p);
  return (q - 1) * (q - 2) * (q - 3) * (q - 4);
}

Rank2Bounds hurwitz_bounds_rank2(std::int64_t n) {
  if (n < 5 || std::gcd(n, std::int64_t{6}) != 1) {
    throw Error(ErrorKind::invalid_n, "need n >= 5 with gcd(n, 6) = 1, got " + std::to_string(n));
  }
  std::uint64_t N = 1;
  for (auto [p, k] : nt::factorize(n)) N *= ipow(static_cast<std::uint64_t>(p), 4 * k - 4) * Np_formula(p);
  const auto big = static_cast<std::int64_t>(N);
  return {N, Rational(big, 72), Rational(big, 6)};
}

RamificationStructure construct_structure_zpzr(std::int64_t p, int r) {
  if (p < 5) throw Error(ErrorKind::p_too_small, "need p >= 5, got " + std::to_string(p));
  if (!nt::is_prime(p)) throw Error(ErrorKind::precondition, std::to_string(p) + " is not prime");
  if (r < 2) throw Error(ErrorKind::precondition, "rank must be at least 2");
  const auto quads = count_Np(p).quadruples;
  if (quads.empty()) throw Error(ErrorKind::construction_failure, "no valid quadruple");
  const auto [a, b, c, d] = quads.front();
  using Pair = std::array<std::int64_t, 2>;
  const std::vector<Pair> xs{{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}};
  const std::vector<Pair> ys{{a, b}, {-a, -b}, {c, d}, {-c, -d}, {a + c, b + d}, {-a - c, -b - d}};
  auto norm = [p](Pair v) { return Pair{nt::mod(v[0], p), nt::mod(v[1], p)}; };
  const auto free = static_cast<std::size_t>(r - 2);

  // Vectors e_i + P_i (i <= r-2), then two pure pairs, then minus the sum; the
  // free pairs are the first choice in candidate order closing the sum.
  auto build = [&](const std::vector<Pair>& cand, Pair u, Pair v) -> std::vector<Element> {
    std::vector<std::size_t> pick(free, 0);
    while (true) {
      Pair sum{u[0] + v[0], u[1] + v[1]};
      for (auto k : pick) {
        sum[0] += cand[k][0];
        sum[1] += cand[k][1];
      }
      const auto last = norm({-sum[0], -sum[1]});
      const bool closes = std::any_of(cand.begin(), cand.end(), [&](const Pair& q) { return norm(q) == last; });
      if (closes) {
        std::vector<Element> out;
        auto vec = [&](std::vector<std::int64_t> head, Pair tail) {
          Element e;
          for (auto h : head) e.code.push_back(static_cast<std::int32_t>(nt::mod(h, p)));
          const auto n = norm(tail);
          e.code.push_back(static_cast<std::int32_t>(n[0]));
          e.code.push_back(static_cast<std::int32_t>(n[1]));
          return e;
        };
        for (std::size_t i = 0; i < free; ++i) {
          std::vector<std::int64_t> head(free, 0);
          head[i] = 1;
          out.push_back(vec(head, cand[pick[i]]));
        }
        out.push_back(vec(std::vector<std::int64_t>(free, 0), u));
        out.push_back(vec(std::vector<std::int64_t>(free, 0), v));
        out.push_back(vec(std::vector<std::int64_t>(free, -1), last));
        return out;
      }
      std::size_t i = 0;
      while (i < free && ++pick[i] == cand.size()) pick[i++] = 0;
      if (i == free) throw Error(ErrorKind::construction_failure, "no closing choice of free pairs");
    }
  };

  const auto g = make_group(abelian_spec(std::vector<std::int64_t>(static_cast<std::size_t>(r), p)));
  try {
    SphericalSystem t1(g, build(xs, {1, 0}, {0, 1}));
    SphericalSystem t2(g, build(ys, {a, b}, {c, d}));
    RamificationStructure s(std::move(t1), std::move(t2));
    if (!check_genus_ge_2(s)) throw Error(ErrorKind::construction_failure, "genus below 2");
    return s;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::construction_failure) throw;
    throw Error(ErrorKind::construction_failure, e.what());
  }
}

std::uint64_t gl_order(int k, std::int64_t p) {
  const auto q = static_cast<std::uint64_t>(p);
  std::uint64_t out = 1;
  const auto qk = ipow(q, k);
  for (int i = 0; i < k; ++i) out *= qk - ipow(q, i);
  return out;
}

ZpzrBounds count_h_zpzr_bounds(std::int64_t p, int r) {
  if (p <= 5 || !nt::is_prime(p)) throw Error(ErrorKind::p_too_small, "need a prime p > 5, got " + std::to_string(p));
  if (r < 2) throw Error(ErrorKind::precondition, "rank must be at least 2");
  const auto q = static_cast<std::uint64_t>(p);
  const int k = r - 2;
  ZpzrBounds out;
  out.orbit_lower = gl_order(k, p) * ipow(q, 2 * k) * ipow((q - 1) * (q - 2), k) * (q * q - 3 * q + 1) *
                    (q * q - 8 * q + 15);
  out.orbit_upper = gl_order(r, p);
  const auto f = factorial(r + 1);
  out.h_lower = Rational(static_cast<std::int64_t>(out.orbit_lower), static_cast<std::int64_t>(2 * f * f));
  out.h_upper = Rational(static_cast<std::int64_t>(out.orbit_upper), static_cast<std::int64_t>(f));
  return out;
}

}  // namespace hurwitz::abelian
