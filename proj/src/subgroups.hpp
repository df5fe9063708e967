#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::vector<std::uint64_t> blocks(b.num_blocks());
    boost::to_block_range(b, blocks.begin());
    std::size_t h = b.size();
    for (auto v : blocks) h = h * 0x9e3779b97f4a7c15ull ^ (v + (h >> 7));
    return h;
  }
};

// Interns the subgroups met while extending generator tuples one element at
// a time, so that "does the tuple generate G" costs a hash lookup once warm.
// Not thread-safe; use one per worker.
class SubgroupCache {
 public:
  explicit SubgroupCache(const GroupHandle& g) : g_(g) {
    Bits trivial(g.size());
    trivial.set(g.identity_id());
    intern(std::move(trivial), {});
  }

  static constexpr std::uint32_t trivial() { return 0; }

  std::uint32_t join(std::uint32_t h, ElemId x) {
    if (sets_[h].test(x)) return h;
    const std::uint64_t key = static_cast<std::uint64_t>(h) * g_.size() + x;
    if (auto it = joins_.find(key); it != joins_.end()) return it->second;
    auto gens = gens_[h];
    gens.push_back(x);
    const std::uint32_t id = intern(g_.subgroup(gens), gens);
    joins_.emplace(key, id);
    return id;
  }

  bool whole(std::uint32_t h) const { return sets_[h].count() == g_.size(); }
  const Bits& members(std::uint32_t h) const { return sets_[h]; }
  std::size_t count() const { return sets_.size(); }

 private:
  std::uint32_t intern(Bits set, std::vector<ElemId> gens) {
    auto [it, fresh] = index_.emplace(set, static_cast<std::uint32_t>(sets_.size()));
    if (fresh) {
      sets_.push_back(std::move(set));
      gens_.push_back(std::move(gens));
    }
    return it->second;
  }

  const GroupHandle& g_;
  std::vector<Bits> sets_;
  std::vector<std::vector<ElemId>> gens_;
  std::unordered_map<Bits, std::uint32_t, BitsHash> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> joins_;
};

// For each conjugacy class, the prime-order classes among the powers of its
// elements. Two Sigma-sets meet outside the identity iff they share an
// element of prime order, so these masks decide disjointness.
inline std::vector<Bits> prime_class_masks(const GroupHandle& g) {
  const auto classes = g.conjugacy_classes();
  std::vector<bool> prime(classes.size());
  for (const auto& c : classes) {
    bool p = c.order >= 2;
    for (std::uint32_t d = 2; d * d <= c.order && p; ++d) p = c.order % d != 0;
    prime[c.id] = p;
  }
  std::vector<Bits> out;
  out.reserve(classes.size());
  for (const auto& c : classes) {
    Bits m = g.power_classes(c.id);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.test(k) && !prime[k]) m.reset(k);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hurwitz::detail
