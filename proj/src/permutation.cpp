#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace hurwitz::perm {

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i] - 1];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<std::int32_t>(i + 1);
  return out;
}

bool is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v < 1 || v > static_cast<std::int32_t>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

CycleType cycle_type(const Perm& p) {
  CycleType type;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::int32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = true;
      ++len;
    }
    if (len >= 2) type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool type_is_even(const CycleType& type) {
  int odd_cycles = 0;
  for (auto len : type) odd_cycles += (len % 2 == 0);
  return odd_cycles % 2 == 0;
}

bool is_even(const Perm& p) { return type_is_even(cycle_type(p)); }

std::uint64_t order_of_type(const CycleType& type) {
  std::uint64_t result = 1;
  for (auto len : type) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::uint64_t order(const Perm& p) { return order_of_type(cycle_type(p)); }

int moved_points(const CycleType& type) { return std::accumulate(type.begin(), type.end(), 0); }

Perm from_cycle_type(const CycleType& type, int n) {
  Perm p = identity(n);
  int start = 0;
  for (auto len : type) {
    for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len + 1;
    start += len;
  }
  return p;
}

std::vector<CycleType> power_types(const CycleType& type) {
  std::vector<CycleType> out;
  const auto ord = order_of_type(type);
  for (std::uint64_t k = 1; k <= ord; ++k) {
    CycleType t;
    for (auto len : type) {
      const auto g = static_cast<std::int32_t>(std::gcd(static_cast<std::uint64_t>(len), k));
      const auto piece = len / g;
      if (piece >= 2) t.insert(t.end(), g, piece);
    }
    std::sort(t.rbegin(), t.rend());
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<CycleType> types_of_order(int n, std::uint64_t order) {
  std::vector<CycleType> out;
  CycleType current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (order_of_type(current) == order) out.push_back(current);
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
      if (order % static_cast<std::uint64_t>(part) != 0) continue;
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Perm random_perm(int n, std::mt19937_64& rng) {
  Perm p = identity(n);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(p[i], p[pick(rng)]);
  }
  return p;
}

namespace {

// 0-based permutations acting on the right: x^g = g[x].
using P0 = std::vector<int>;

P0 mul0(const P0& a, const P0& b) {
  P0 out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

P0 inv0(const P0& a) {
  P0 out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

bool is_id0(const P0& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != static_cast<int>(i)) return false;
  }
  return true;
}

struct Level {
  int base = 0;
  std::vector<P0> gens;
  std::vector<std::optional<P0>> transversal;  // indexed by point
  std::vector<int> orbit;
};

void rebuild_orbit(Level& level, int n) {
  level.transversal.assign(n, std::nullopt);
  level.orbit.clear();
  P0 id(n);
  std::iota(id.begin(), id.end(), 0);
  level.transversal[level.base] = id;
  level.orbit.push_back(level.base);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (const auto& g : level.gens) {
      const int y = g[x];
      if (!level.transversal[y]) {
        level.transversal[y] = mul0(*level.transversal[x], g);
        level.orbit.push_back(y);
      }
    }
  }
}

}  // namespace

std::uint64_t group_order(std::span<const Perm> gens, int n) {
  std::vector<P0> g0;
  for (const auto& g : gens) {
    P0 p(n);
    for (int i = 0; i < n; ++i) p[i] = g[i] - 1;
    if (!is_id0(p)) g0.push_back(std::move(p));
  }
  if (g0.empty()) return 1;

  std::vector<Level> levels;
  auto first_moved = [](const P0& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != static_cast<int>(i)) return static_cast<int>(i);
    }
    return -1;
  };
  levels.push_back(Level{first_moved(g0.front()), g0, {}, {}});
  rebuild_orbit(levels[0], n);

  auto strip = [&](P0 g, std::size_t start) -> std::pair<P0, std::size_t> {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const int x = g[levels[l].base];
      if (!levels[l].transversal[x]) return {g, l};
      g = mul0(g, inv0(*levels[l].transversal[x]));
    }
    return {g, levels.size()};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto& level = levels[i];
    const auto orbit = level.orbit;
    const auto gens_here = level.gens;
    for (int beta : orbit) {
      for (const auto& s : gens_here) {
        const auto& u_beta = *levels[i].transversal[beta];
        const auto& u_gamma = *levels[i].transversal[s[beta]];
        P0 schreier = mul0(mul0(u_beta, s), inv0(u_gamma));
        auto [h, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (j == levels.size() && is_id0(h)) continue;
        if (j == levels.size()) {
          levels.push_back(Level{first_moved(h), {}, {}, {}});
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels[l].gens.push_back(h);
          rebuild_orbit(levels[l], n);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }

  std::uint64_t result = 1;
  for (const auto& level : levels) result *= level.orbit.size();
  return result;
}

}  // namespace hurwitz::perm
