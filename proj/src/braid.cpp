#include "hurwitz/braid.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"
#include "json.hpp"
#include "orbit_space.hpp"
#include "subgroups.hpp"

namespace hurwitz {

using detail::OrbitSpace;
using detail::UnionFind;

// ---- moves ----------------------------------------------------------------

void braid_move_ids(const GroupHandle& g, IdTuple& t, std::size_t i) {
  if (i + 1 >= t.size()) throw Error(ErrorKind::index_out_of_range, "braid index out of range");
  const ElemId x = t[i], y = t[i + 1];
  t[i] = g.conjugate(x, y);
  t[i + 1] = x;
}

void braid_move_inverse_ids(const GroupHandle& g, IdTuple& t, std::size_t i) {
  if (i + 1 >= t.size()) throw Error(ErrorKind::index_out_of_range, "braid index out of range");
  const ElemId x = t[i], y = t[i + 1];
  t[i] = y;
  t[i + 1] = g.conjugate(g.inv(y), x);
}

namespace {

SphericalSystem move(const SphericalSystem& t, std::size_t i, bool inverse) {
  if (i < 1 || i >= t.size()) {
    throw Error(ErrorKind::index_out_of_range,
                "braid index " + std::to_string(i) + " outside 1.." + std::to_string(t.size() - 1));
  }
  const auto& g = t.group();
  auto e = t.elements();
  const Element x = e[i - 1], y = e[i];
  if (!inverse) {
    e[i - 1] = g.multiply(g.multiply(x, y), g.inverse(x));
    e[i] = x;
  } else {
    e[i - 1] = y;
    e[i] = g.multiply(g.multiply(g.inverse(y), x), y);
  }
  return SphericalSystem(g, std::move(e));
}

IdTuple to_ids(const SphericalSystem& t) {
  IdTuple ids;
  for (const auto& e : t.elements()) ids.push_back(t.group().id(e));
  return ids;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void fill_histogram(OrbitReport& report, const std::vector<std::uint64_t>& sizes) {
  std::map<std::uint64_t, std::uint64_t, std::greater<>> hist;
  report.objects = 0;
  for (auto s : sizes) {
    ++hist[s];
    report.objects += s;
  }
  report.histogram.assign(hist.begin(), hist.end());
  report.count = sizes.size();
}

}  // namespace

SphericalSystem braid_move(const SphericalSystem& t, std::size_t i) { return move(t, i, false); }
SphericalSystem braid_move_inverse(const SphericalSystem& t, std::size_t i) { return move(t, i, true); }

std::vector<IdTuple> braid_orbit_ids(const GroupHandle& g, const IdTuple& t, std::uint64_t budget) {
  std::unordered_set<IdTuple, detail::TupleHash> seen{t};
  std::vector<IdTuple> queue{t};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        IdTuple u = queue[k];
        if (dir == 0) {
          braid_move_ids(g, u, i);
        } else {
          braid_move_inverse_ids(g, u, i);
        }
        if (seen.insert(u).second) {
          if (seen.size() > budget) throw Error(ErrorKind::budget_exceeded, "braid orbit exceeds budget");
          queue.push_back(std::move(u));
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<SphericalSystem> braid_orbit(const SphericalSystem& t, std::uint64_t budget) {
  const auto& g = t.group();
  std::vector<SphericalSystem> out;
  for (const auto& ids : braid_orbit_ids(g, to_ids(t), budget)) {
    std::vector<Element> e;
    for (auto x : ids) e.push_back(g.element(x));
    out.emplace_back(g, std::move(e));
  }
  return out;
}

// ---- report ---------------------------------------------------------------

std::string OrbitReport::json(bool with_time) const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["group"] = group;
  j["tau1"] = tau1.str();
  j["tau2"] = tau2 ? nlohmann::ordered_json(tau2->str()) : nlohmann::ordered_json(nullptr);
  j["count"] = count;
  j["method"] = method;
  auto hist = nlohmann::ordered_json::array();
  for (auto [size, mult] : histogram) hist.push_back({size, mult});
  j["histogram"] = hist;
  j["objects"] = objects;
  j["cross_checked"] = cross_checked;
  if (with_time) j["seconds"] = seconds;
  return j.dump();
}

// ---- counting -------------------------------------------------------------

namespace {

// Braid-move components over every ordered system, without any reduction.
std::uint32_t plain_braid_components(const GroupHandle& g, const TypeVector& tau, const CountOptions& options) {
  auto all = enumerate_system_ids(g, tau, {.budget = options.budget, .threads = options.threads});
  std::unordered_map<IdTuple, std::uint32_t, detail::TupleHash> index;
  for (std::uint32_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  UnionFind uf(all.size());
  for (std::uint32_t k = 0; k < all.size(); ++k) {
    for (std::size_t i = 0; i + 1 < tau.size(); ++i) {
      IdTuple u = all[k];
      braid_move_ids(g, u, i);
      uf.unite(k, index.at(u));
    }
  }
  std::uint32_t count = 0;
  uf.labels(count);
  return count;
}

struct Components {
  std::vector<std::uint32_t> label;  // per representative
  std::uint32_t count = 0;
  std::vector<std::uint64_t> objects;  // ordered systems per component
  std::vector<std::uint32_t> first;    // a representative index per component
};

enum class Moves { braid, reorder, reorder_aut };

Components components(const GroupHandle& g, const OrbitSpace& space, Moves moves, unsigned threads) {
  const std::size_t r = space.size() ? space.rep(0).size() : 0;
  const auto* auts = moves == Moves::reorder_aut ? &g.aut_permutations() : nullptr;
  const std::size_t per = moves == Moves::braid ? r - 1 : 2 + (auts ? auts->size() : 0);
  std::vector<std::uint32_t> next(space.size() * per);
  detail::parallel_for(space.size(), threads, [&](std::size_t k) {
    const auto& t = space.rep(k);
    if (moves == Moves::braid) {
      for (std::size_t i = 0; i + 1 < r; ++i) {
        IdTuple u = t;
        braid_move_ids(g, u, i);
        next[k * per + i] = space.find(u);
      }
    } else {
      // (x,y,z) -> (y,z,x) and (x,y,z) -> (y,x,(yx)^-1)
      next[k * per] = space.find({t[1], t[2], t[0]});
      next[k * per + 1] = space.find({t[1], t[0], g.inv(g.mul(t[1], t[0]))});
      if (auts) {
        for (std::size_t a = 0; a < auts->size(); ++a) {
          const auto& f = (*auts)[a];
          next[k * per + 2 + a] = space.find({f[t[0]], f[t[1]], f[t[2]]});
        }
      }
    }
  });
  UnionFind uf(space.size());
  for (std::uint32_t k = 0; k < space.size(); ++k) {
    for (std::size_t i = 0; i < per; ++i) uf.unite(k, next[k * per + i]);
  }
  Components c;
  c.label = uf.labels(c.count);
  c.objects.assign(c.count, 0);
  c.first.assign(c.count, ~0u);
  for (std::uint32_t k = 0; k < space.size(); ++k) {
    c.objects[c.label[k]] += space.conjugation_orbit_size();
    if (c.first[c.label[k]] == ~0u) c.first[c.label[k]] = k;
  }
  return c;
}

OrbitReport single_type_report(const GroupHandle& g, const TypeVector& tau, const CountOptions& options,
                               Moves moves) {
  const auto start = std::chrono::steady_clock::now();
  OrbitSpace space(g, tau, options.budget, options.threads);
  auto comps = components(g, space, moves, options.threads);
  OrbitReport report;
  report.group = g.spec().str();
  report.tau1 = tau;
  report.method = "exhaustive-orbit";
  fill_histogram(report, comps.objects);
  if (options.verify) {
    const auto plain = plain_braid_components(g, tau, options);
    if (plain != report.count) {
      throw Error(ErrorKind::precondition, "braid cross-check disagrees: " + std::to_string(plain) + " vs " +
                                               std::to_string(report.count));
    }
    report.cross_checked = true;
  }
  report.seconds = elapsed(start);
  return report;
}

ClassMask sigma_mask(const GroupHandle& g, const IdTuple& t) {
  ClassMask m(g.conjugacy_classes().size());
  for (auto x : t) m |= g.power_classes(g.class_of(x));
  return m;
}

}  // namespace

OrbitReport count_d(const GroupHandle& g, const TypeVector& tau, const CountOptions& options) {
  if (tau.size() != 3) throw Error(ErrorKind::precondition, "d(G; tau) is defined here for |tau| = 3");
  return single_type_report(g, tau, options, Moves::reorder);
}

OrbitReport count_d_aut(const GroupHandle& g, const TypeVector& tau, const CountOptions& options) {
  if (tau.size() != 3) throw Error(ErrorKind::precondition, "d'(G; tau) is defined here for |tau| = 3");
  // The plain braid cross-check does not see Aut(G), so it is skipped here.
  return single_type_report(g, tau, {.verify = false, .threads = options.threads, .budget = options.budget},
                            Moves::reorder_aut);
}

OrbitReport count_braid_orbits(const GroupHandle& g, const TypeVector& tau, const CountOptions& options) {
  return single_type_report(g, tau, options, Moves::braid);
}

OrbitReport count_h(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                    const CountOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& auts = g.aut_permutations();  // throws aut-unavailable
  const bool same = tau1 == tau2;

  struct Side {
    std::unique_ptr<OrbitSpace> space;
    Components comps;
    std::vector<ClassMask> masks;
    std::vector<std::vector<std::uint32_t>> aut_action;  // per generator: component -> component
  };
  auto build = [&](const TypeVector& tau) {
    Side s;
    s.space = std::make_unique<OrbitSpace>(g, tau, options.budget, options.threads);
    s.comps = components(g, *s.space, Moves::braid, options.threads);
    for (auto k : s.comps.first) s.masks.push_back(sigma_mask(g, s.space->rep(k)));
    for (const auto& a : auts) {
      std::vector<std::uint32_t> act(s.comps.count);
      for (std::uint32_t c = 0; c < s.comps.count; ++c) {
        IdTuple u = s.space->rep(s.comps.first[c]);
        for (auto& x : u) x = a[x];
        act[c] = s.comps.label[s.space->find(u)];
      }
      s.aut_action.push_back(std::move(act));
    }
    return s;
  };
  Side s1 = build(tau1);
  Side s2_storage;
  if (!same) s2_storage = build(tau2);
  const Side& s2 = same ? s1 : s2_storage;

  // Admissible block pairs: disjoint Sigma-sets. With equal types a pair is unordered.
  const auto identity_class = g.class_of(g.identity_id());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pair_index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < s1.comps.count; ++i) {
    for (std::uint32_t j = same ? i + 1 : 0; j < s2.comps.count; ++j) {
      auto common = s1.masks[i] & s2.masks[j];
      common.reset(identity_class);
      if (common.any()) continue;
      pair_index.emplace(std::make_pair(i, j), static_cast<std::uint32_t>(pairs.size()));
      pairs.emplace_back(i, j);
    }
  }
  if (pairs.size() > options.budget) throw Error(ErrorKind::budget_exceeded, "too many admissible block pairs");
  UnionFind uf(pairs.size());
  for (std::size_t a = 0; a < auts.size(); ++a) {
    for (std::uint32_t k = 0; k < pairs.size(); ++k) {
      auto i = s1.aut_action[a][pairs[k].first];
      auto j = s2.aut_action[a][pairs[k].second];
      if (same && i > j) std::swap(i, j);
      uf.unite(k, pair_index.at({i, j}));
    }
  }
  std::uint32_t count = 0;
  const auto label = uf.labels(count);
  std::vector<std::uint64_t> sizes(count, 0);
  for (std::uint32_t k = 0; k < pairs.size(); ++k) {
    sizes[label[k]] += s1.comps.objects[pairs[k].first] * s2.comps.objects[pairs[k].second];
  }
  OrbitReport report;
  report.group = g.spec().str();
  report.tau1 = tau1;
  report.tau2 = tau2;
  report.method = "exhaustive-orbit";
  fill_histogram(report, sizes);
  report.seconds = elapsed(start);
  return report;
}

// ---- class-tuple lower bound ----------------------------------------------

namespace {

struct ClassInfo {
  std::string label;
  std::uint32_t order = 0;
};

// All ways to pick, for each entry of tau, a class of that order, with all
// picks distinct; returned as sorted index lists.
std::vector<std::vector<std::uint32_t>> class_tuples(const std::vector<ClassInfo>& classes, const TypeVector& tau) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t min_index) {
    if (pos == tau.size()) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    // equal orders are chosen in increasing class index to avoid repeats
    const bool continues = pos > 0 && tau.orders[pos] == tau.orders[pos - 1];
    for (std::uint32_t c = continues ? min_index : 0; c < classes.size(); ++c) {
      if (classes[c].order != tau.orders[pos]) continue;
      cur.push_back(c);
      rec(pos + 1, c + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool share_class(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (auto x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

std::string shape_label(const perm::CycleType& shape, int n) {
  std::map<std::int32_t, int, std::greater<>> parts;
  for (auto len : shape) ++parts[len];
  const int fixed = n - perm::moved_points(shape);
  if (fixed) parts[1] = fixed;
  std::string out;
  for (auto [len, mult] : parts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len) + '^' + std::to_string(mult);
  }
  return out;
}

// Counts pairs given per-tuple realizability and a per-pair disjointness test.
template <class Realized, class Disjoint>
LowerBoundResult count_pairs(const std::vector<ClassInfo>& classes, const TypeVector& tau1, const TypeVector& tau2,
                             Realized realized, Disjoint disjoint) {
  LowerBoundResult res;
  const auto t1 = class_tuples(classes, tau1);
  const auto t2 = tau1 == tau2 ? t1 : class_tuples(classes, tau2);
  const bool same = tau1 == tau2;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    for (std::size_t j = same ? i + 1 : 0; j < t2.size(); ++j) {
      if (share_class(t1[i], t2[j]) || !disjoint(t1[i], t2[j])) continue;
      ++res.candidate_pairs;
      if (!realized(1, t1[i]) || !realized(2, t2[j])) continue;
      ++res.count;
      std::vector<std::string> a, b;
      for (auto c : t1[i]) a.push_back(classes[c].label);
      for (auto c : t2[j]) b.push_back(classes[c].label);
      res.witnesses.emplace_back(std::move(a), std::move(b));
    }
  }
  return res;
}

LowerBoundResult lower_bound_enumerated(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                        const LowerBoundOptions& options) {
  const auto& auts = g.aut_permutations();
  const auto cls = g.conjugacy_classes();
  UnionFind fuse(cls.size());
  for (const auto& a : auts) {
    for (const auto& c : cls) fuse.unite(c.id, g.class_of(a[c.representative]));
  }
  std::uint32_t n_aut = 0;
  const auto aut_class = fuse.labels(n_aut);
  std::vector<ClassInfo> classes(n_aut);
  std::vector<ClassMask> aut_sigma(n_aut, ClassMask(cls.size()));
  for (const auto& c : cls) {
    auto& info = classes[aut_class[c.id]];
    if (info.label.empty()) info.label = "C" + std::to_string(c.id) + "/o" + std::to_string(c.order);
    info.order = c.order;
    aut_sigma[aut_class[c.id]] |= g.power_classes(c.id);
  }

  // Realized class tuples per side, with the Sigma masks of their witnesses.
  auto realized_masks = [&](const TypeVector& tau) {
    std::map<std::vector<std::uint32_t>, std::vector<ClassMask>> out;
    OrbitSpace space(g, tau, options.budget, 1);
    for (std::size_t k = 0; k < space.size(); ++k) {
      const auto& t = space.rep(k);
      std::vector<std::uint32_t> key;
      for (auto x : t) key.push_back(aut_class[g.class_of(x)]);
      std::sort(key.begin(), key.end());
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
      auto& masks = out[key];
      const auto m = sigma_mask(g, t);
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
    return out;
  };
  const auto r1 = realized_masks(tau1);
  const auto r2 = tau1 == tau2 ? r1 : realized_masks(tau2);
  const auto identity_class = g.class_of(g.identity_id());
  auto res = count_pairs(
      classes, tau1, tau2,
      [&](int side, const std::vector<std::uint32_t>& key) { return (side == 1 ? r1 : r2).count(key) > 0; },
      [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        auto ia = r1.find(a);
        auto ib = r2.find(b);
        if (ia == r1.end() || ib == r2.end()) {
          // not realized; judge by the Aut-class Sigma union, which is coarser
          ClassMask ma(cls.size()), mb(cls.size());
          for (auto c : a) ma |= aut_sigma[c];
          for (auto c : b) mb |= aut_sigma[c];
          ma &= mb;
          ma.reset(identity_class);
          return ma.none();
        }
        for (const auto& ma : ia->second) {
          for (const auto& mb : ib->second) {
            auto common = ma & mb;
            common.reset(identity_class);
            if (common.none()) return true;
          }
        }
        return false;
      });
  res.method = "exhaustive";
  return res;
}

LowerBoundResult lower_bound_permutation(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                         const LowerBoundOptions& options) {
  const int n = static_cast<int>(g.spec().params[0]);
  const bool alt = g.spec().family == Family::alternating;
  if (n == 6) throw Error(ErrorKind::aut_unavailable, "degree 6 has an exceptional outer automorphism");
  std::set<std::uint32_t> wanted(tau1.orders.begin(), tau1.orders.end());
  wanted.insert(tau2.orders.begin(), tau2.orders.end());
  std::vector<ClassInfo> classes;
  std::vector<perm::CycleType> shapes;
  for (auto m : wanted) {
    for (const auto& shape : perm::types_of_order(n, m)) {
      if (alt && !perm::type_is_even(shape)) continue;
      if (options.candidates == ClassCandidates::almost_homogeneous &&
          std::any_of(shape.begin(), shape.end(), [&](auto len) { return len != shape.front(); })) {
        continue;
      }
      classes.push_back({shape_label(shape, n), m});
      shapes.push_back(shape);
    }
  }
  std::vector<std::set<perm::CycleType>> powers;
  for (const auto& s : shapes) {
    auto p = perm::power_types(s);
    powers.emplace_back(p.begin(), p.end());
    powers.back().erase(perm::CycleType{});
  }
  // log of the class size in S_n, to pick the largest class as the forced entry
  auto log_class_size = [&](const perm::CycleType& s) {
    std::map<int, int> mult;
    for (auto len : s) ++mult[len];
    double v = std::lgamma(n + 1.0) - std::lgamma(n - perm::moved_points(s) + 1.0);
    for (auto [len, k] : mult) v -= k * std::log(static_cast<double>(len)) + std::lgamma(k + 1.0);
    return v;
  };

  std::mt19937_64 rng(options.seed);
  std::map<std::vector<std::uint32_t>, bool> cache;
  auto realized = [&](int, const std::vector<std::uint32_t>& key) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // Riemann-Hurwitz: a transitive tuple has total index 2n - 2 + 2g.
    int index = 0;
    for (auto c : key) {
      for (auto len : shapes[c]) index += len - 1;
    }
    if (index < 2 * n - 2 || index % 2 != 0) {
      cache.emplace(key, false);
      return false;
    }
    auto order = key;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return log_class_size(shapes[a]) < log_class_size(shapes[b]);
    });
    const perm::Perm first = perm::from_cycle_type(shapes[order[0]], n);
    std::vector<perm::Perm> reps;
    for (auto c : order) reps.push_back(perm::from_cycle_type(shapes[c], n));
    bool ok = false;
    for (std::uint64_t t = 0; t < options.trials_per_tuple && !ok; ++t) {
      std::vector<perm::Perm> tuple{first};
      perm::Perm prod = first;
      for (std::size_t i = 1; i + 1 < order.size(); ++i) {
        const auto s = perm::random_perm(n, rng);
        auto x = perm::compose(perm::compose(perm::inverse(s), reps[i]), s);
        prod = perm::compose(prod, x);
        tuple.push_back(std::move(x));
      }
      auto last = perm::inverse(prod);
      if (perm::cycle_type(last) != shapes[order.back()]) continue;
      tuple.push_back(std::move(last));
      ok = perm::group_order(tuple, n) == g.order();
    }
    cache.emplace(key, ok);
    return ok;
  };
  auto res = count_pairs(classes, tau1, tau2, realized,
                         [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                           for (auto x : a) {
                             for (auto y : b) {
                               for (const auto& s : powers[x]) {
                                 if (powers[y].count(s)) return false;
                               }
                             }
                           }
                           return true;
                         });
  res.method = "randomized";
  return res;
}

}  // namespace

LowerBoundResult class_tuple_lower_bound(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                         const LowerBoundOptions& options) {
  const bool perm_family = g.spec().family == Family::symmetric || g.spec().family == Family::alternating;
  if (perm_family && (!g.enumerated() || options.candidates == ClassCandidates::almost_homogeneous)) {
    return lower_bound_permutation(g, tau1, tau2, options);
  }
  if (!g.enumerated()) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": lower bound needs an enumerated group");
  }
  if (options.candidates == ClassCandidates::almost_homogeneous) {
    throw Error(ErrorKind::precondition, "almost homogeneous classes apply to permutation groups");
  }
  return lower_bound_enumerated(g, tau1, tau2, options);
}

// ---- almost homogeneous classes -------------------------------------------

namespace {

std::optional<std::vector<perm::CycleType>> choose_at(int n, const std::vector<std::uint32_t>& entries) {
  std::vector<perm::CycleType> out;
  std::set<int> used_fixed;
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == entries.size()) return true;
    const int m = static_cast<int>(entries[pos]);
    for (int j = n / m; j >= 1; --j) {
      const int f = n - m * j;
      perm::CycleType shape(j, m);
      if (!perm::type_is_even(shape) || used_fixed.count(f)) continue;
      used_fixed.insert(f);
      out.push_back(shape);
      if (rec(pos + 1)) return true;
      out.pop_back();
      used_fixed.erase(f);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return out;
}

}  // namespace

std::vector<std::vector<std::int32_t>> choose_almost_homogeneous_classes(int n, const std::vector<std::uint32_t>& orders,
                                                                         int k) {
  if (orders.empty() || k < 1) throw Error(ErrorKind::precondition, "need at least one order and k >= 1");
  std::vector<std::uint32_t> entries;
  for (auto m : orders) {
    if (m < 2) throw Error(ErrorKind::precondition, "orders must be at least 2");
    entries.insert(entries.end(), k, m);
  }
  if (auto found = choose_at(n, entries)) return *found;
  for (int larger = std::max(n + 1, 2); larger <= n + 4096; ++larger) {
    if (choose_at(larger, entries)) {
      throw Error(ErrorKind::n_too_small, "n = " + std::to_string(n) + " is too small; least feasible n is " +
                                              std::to_string(larger));
    }
  }
  throw Error(ErrorKind::n_too_small, "no feasible n found");
}

}  // namespace hurwitz
