// Search for disjoint pairs of spherical systems.
//
// Exhaustive mode walks ordered tuples depth first with memoisation on the
// state (depth, partial product, generated subgroup, remaining orders, prime
// Sigma mask). First side: every reachable final mask. Second side: for each
// first-side mask, a plain existence search over entries whose powers avoid
// that mask. Both sides are taken up to inner conjugation since Sigma-sets are
// conjugation invariant.

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

#include "hurwitz/error.hpp"
#include "hurwitz/spherical.hpp"
#include "subgroups.hpp"

namespace hurwitz {
namespace {

using detail::Bits;

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : k) h = (h ^ v) * 0x100000001b3ull ^ (h >> 29);
    return h;
  }
};
using StateSet = std::unordered_set<std::vector<std::uint64_t>, KeyHash>;

// Order constraint for one side: a type (multiset of orders) or only a size.
struct SideSpec {
  std::size_t r = 0;
  std::vector<std::uint32_t> distinct;  // empty in size mode
  std::vector<std::uint32_t> counts;

  static SideSpec of_type(const TypeVector& tau) {
    SideSpec s;
    s.r = tau.size();
    for (auto m : tau.orders) {
      if (s.distinct.empty() || s.distinct.back() != m) {
        s.distinct.push_back(m);
        s.counts.push_back(0);
      }
      ++s.counts.back();
    }
    return s;
  }
  static SideSpec of_size(std::size_t r) {
    if (r < 3) throw Error(ErrorKind::precondition, "sizes must be at least 3");
    SideSpec s;
    s.r = r;
    return s;
  }
  bool typed() const { return !distinct.empty(); }
  std::size_t slot(std::uint32_t order) const {
    return static_cast<std::size_t>(std::find(distinct.begin(), distinct.end(), order) - distinct.begin());
  }
  std::uint64_t code(const std::vector<std::uint32_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < c.size(); ++j) v = v * (r + 1) + c[j];
    return v;
  }
};

class PairSearch {
 public:
  PairSearch(const GroupHandle& g, SideSpec s1, SideSpec s2, std::uint64_t state_budget)
      : g_(g), s1_(std::move(s1)), s2_(std::move(s2)), budget_(state_budget), cache_(g),
        pmask_(detail::prime_class_masks(g)) {
    for (ElemId x = 0; x < g.size(); ++x) {
      if (x == g.identity_id()) continue;
      nonidentity_.push_back(x);
      if (g.conjugacy_classes()[g.class_of(x)].representative == x) reps_.push_back(x);
    }
  }

  SearchResult run() {
    SearchResult result;
    auto counts = s1_.counts;
    IdTuple tuple;
    Bits empty(g_.conjugacy_classes().size());
    side_one(tuple, g_.identity_id(), detail::SubgroupCache::trivial(), empty, counts);
    result.work = work_;
    if (found_) {
      result.outcome = SearchResult::Outcome::found;
      result.structure = RamificationStructure(to_system(first_), to_system(second_));
    }
    return result;
  }

 private:
  bool allowed(const SideSpec& s, const std::vector<std::uint32_t>& counts, ElemId x) const {
    if (!s.typed()) return true;
    const auto j = s.slot(g_.order_of(x));
    return j < counts.size() && counts[j] > 0;
  }

  void tick() {
    if (++work_ > budget_) {
      throw Error(ErrorKind::budget_exceeded, "exhaustive search exceeded " + std::to_string(budget_) + " states");
    }
  }

  const std::vector<ElemId>& candidates(std::size_t depth) const { return depth == 0 ? reps_ : nonidentity_; }

  void side_one(IdTuple& tuple, ElemId prod, std::uint32_t h, const Bits& mask, std::vector<std::uint32_t>& counts) {
    if (found_) return;
    tick();
    std::vector<std::uint64_t> key{tuple.size(), prod, h, s1_.code(counts)};
    std::vector<std::uint64_t> blocks(mask.num_blocks());
    boost::to_block_range(mask, blocks.begin());
    key.insert(key.end(), blocks.begin(), blocks.end());
    if (!seen1_.insert(std::move(key)).second) return;

    if (tuple.size() + 1 == s1_.r) {
      const ElemId last = g_.inv(prod);
      if (last == g_.identity_id() || !cache_.whole(h) || !allowed(s1_, counts, last)) return;
      Bits final_mask = mask | pmask_[g_.class_of(last)];
      tuple.push_back(last);
      try_partner(tuple, final_mask);
      tuple.pop_back();
      return;
    }
    for (ElemId x : candidates(tuple.size())) {
      if (!allowed(s1_, counts, x)) continue;
      std::size_t j = s1_.typed() ? s1_.slot(g_.order_of(x)) : 0;
      if (s1_.typed()) --counts[j];
      tuple.push_back(x);
      side_one(tuple, g_.mul(prod, x), cache_.join(h, x), mask | pmask_[g_.class_of(x)], counts);
      tuple.pop_back();
      if (s1_.typed()) ++counts[j];
      if (found_) return;
    }
  }

  void try_partner(const IdTuple& t1, const Bits& m1) {
    if (!tried_.insert(m1).second) return;
    for (const auto& f : failed_) {
      if (f.is_subset_of(m1)) return;
    }
    forbidden_ = m1;
    seen2_.clear();
    auto counts = s2_.counts;
    IdTuple tuple;
    if (side_two(tuple, g_.identity_id(), detail::SubgroupCache::trivial(), counts)) {
      found_ = true;
      first_ = t1;
      second_ = tuple;
    } else {
      failed_.push_back(m1);
    }
  }

  bool avoids(ElemId x) const { return !pmask_[g_.class_of(x)].intersects(forbidden_); }

  bool side_two(IdTuple& tuple, ElemId prod, std::uint32_t h, std::vector<std::uint32_t>& counts) {
    tick();
    if (tuple.size() + 1 == s2_.r) {
      const ElemId last = g_.inv(prod);
      if (last == g_.identity_id() || !cache_.whole(h) || !allowed(s2_, counts, last) || !avoids(last)) {
        return false;
      }
      tuple.push_back(last);
      return true;
    }
    if (!seen2_.insert({tuple.size(), prod, h, s2_.code(counts)}).second) return false;
    for (ElemId x : candidates(tuple.size())) {
      if (!allowed(s2_, counts, x) || !avoids(x)) continue;
      std::size_t j = s2_.typed() ? s2_.slot(g_.order_of(x)) : 0;
      if (s2_.typed()) --counts[j];
      tuple.push_back(x);
      const bool ok = side_two(tuple, g_.mul(prod, x), cache_.join(h, x), counts);
      if (ok) return true;
      tuple.pop_back();
      if (s2_.typed()) ++counts[j];
    }
    return false;
  }

  SphericalSystem to_system(const IdTuple& ids) const {
    std::vector<Element> elems;
    for (auto x : ids) elems.push_back(g_.element(x));
    return SphericalSystem(g_, std::move(elems));
  }

  const GroupHandle& g_;
  SideSpec s1_, s2_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  detail::SubgroupCache cache_;
  std::vector<Bits> pmask_;
  std::vector<ElemId> nonidentity_, reps_;
  StateSet seen1_, seen2_;
  std::unordered_set<Bits, detail::BitsHash> tried_;
  std::vector<Bits> failed_;
  Bits forbidden_;
  bool found_ = false;
  IdTuple first_, second_;
};

class RandomSearch {
 public:
  RandomSearch(const GroupHandle& g, SideSpec s1, SideSpec s2, const SearchOptions& options)
      : g_(g), sides_{std::move(s1), std::move(s2)}, options_(options), rng_(options.seed), cache_(g),
        pmask_(detail::prime_class_masks(g)) {
    for (ElemId x = 0; x < g.size(); ++x) {
      if (x != g.identity_id()) by_order_[g.order_of(x)].push_back(x);
      if (x != g.identity_id()) nonidentity_.push_back(x);
    }
  }

  SearchResult run() {
    SearchResult result;
    result.outcome = SearchResult::Outcome::inconclusive;
    for (std::uint64_t t = 0; t < options_.trials; ++t) {
      result.work = t + 1;
      const int side = static_cast<int>(t % 2);
      auto tuple = sample(sides_[side]);
      if (!tuple) continue;
      Bits mask(g_.conjugacy_classes().size());
      for (auto x : *tuple) mask |= pmask_[g_.class_of(x)];
      if (std::any_of(pool_[side].begin(), pool_[side].end(), [&](const auto& e) { return e.first == mask; })) {
        continue;
      }
      for (const auto& [other_mask, other] : pool_[1 - side]) {
        if (mask.intersects(other_mask)) continue;
        const IdTuple& a = side == 0 ? *tuple : other;
        const IdTuple& b = side == 0 ? other : *tuple;
        result.outcome = SearchResult::Outcome::found;
        result.structure = RamificationStructure(to_system(a), to_system(b));
        return result;
      }
      pool_[side].emplace_back(std::move(mask), std::move(*tuple));
    }
    return result;
  }

 private:
  std::optional<IdTuple> sample(const SideSpec& s) {
    std::vector<std::uint32_t> orders;
    if (s.typed()) {
      for (std::size_t j = 0; j < s.distinct.size(); ++j) orders.insert(orders.end(), s.counts[j], s.distinct[j]);
      std::shuffle(orders.begin(), orders.end(), rng_);
    }
    IdTuple tuple;
    ElemId prod = g_.identity_id();
    std::uint32_t h = detail::SubgroupCache::trivial();
    for (std::size_t i = 0; i + 1 < s.r; ++i) {
      const auto& pool = s.typed() ? by_order_[orders[i]] : nonidentity_;
      if (pool.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const ElemId x = pool[pick(rng_)];
      tuple.push_back(x);
      prod = g_.mul(prod, x);
      h = cache_.join(h, x);
    }
    const ElemId last = g_.inv(prod);
    if (last == g_.identity_id() || !cache_.whole(h)) return std::nullopt;
    if (s.typed() && g_.order_of(last) != orders.back()) return std::nullopt;
    tuple.push_back(last);
    return tuple;
  }

  SphericalSystem to_system(const IdTuple& ids) const {
    std::vector<Element> elems;
    for (auto x : ids) elems.push_back(g_.element(x));
    return SphericalSystem(g_, std::move(elems));
  }

  const GroupHandle& g_;
  SideSpec sides_[2];
  SearchOptions options_;
  std::mt19937_64 rng_;
  detail::SubgroupCache cache_;
  std::vector<Bits> pmask_;
  std::map<std::uint32_t, std::vector<ElemId>> by_order_;
  std::vector<ElemId> nonidentity_;
  std::vector<std::pair<Bits, IdTuple>> pool_[2];
};

SearchResult search(const GroupHandle& g, SideSpec s1, SideSpec s2, const SearchOptions& options) {
  if (!g.enumerated()) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": structure search needs an enumerated group");
  }
  if (options.mode == SearchMode::randomized) return RandomSearch(g, std::move(s1), std::move(s2), options).run();
  return PairSearch(g, std::move(s1), std::move(s2), options.state_budget).run();
}

}  // namespace

SearchResult exists_unmixed_structure(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                      const SearchOptions& options) {
  return search(g, SideSpec::of_type(tau1), SideSpec::of_type(tau2), options);
}

SearchResult exists_unmixed_structure(const GroupHandle& g, const SideConstraint& side1,
                                      const SideConstraint& side2, const SearchOptions& options) {
  auto to_spec = [](const SideConstraint& c) {
    return c.type ? SideSpec::of_type(*c.type) : SideSpec::of_size(c.size);
  };
  return search(g, to_spec(side1), to_spec(side2), options);
}

SearchResult exists_unmixed_structure_sizes(const GroupHandle& g, std::size_t r1, std::size_t r2,
                                            const SearchOptions& options) {
  return search(g, SideSpec::of_size(r1), SideSpec::of_size(r2), options);
}

}  // namespace hurwitz
