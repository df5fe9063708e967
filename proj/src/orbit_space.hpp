#pragma once

// Ordered systems of one type modulo G-conjugation, stored as canonical
// representatives: first entry a class representative, the tuple minimal
// under conjugation by that representative's centralizer.

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hurwitz/error.hpp"
#include "hurwitz/spherical.hpp"

namespace hurwitz::detail {

struct TupleHash {
  std::size_t operator()(const IdTuple& t) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto v : t) h = (h ^ v) * 0x100000001b3ull;
    return h ^ (h >> 31);
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Dense component labels in order of first appearance.
  std::vector<std::uint32_t> labels(std::uint32_t& count) {
    std::vector<std::uint32_t> out(parent_.size());
    std::vector<std::uint32_t> remap(parent_.size(), ~0u);
    count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) {
      const auto root = find(i);
      if (remap[root] == ~0u) remap[root] = count++;
      out[i] = remap[root];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n / 64, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      constexpr std::size_t chunk = 256;
      for (std::size_t start = next.fetch_add(chunk); start < n; start = next.fetch_add(chunk)) {
        for (std::size_t i = start; i < std::min(n, start + chunk); ++i) fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const GroupHandle& g) : g_(g), abelian_(g.center_order() == g.order()) {
    if (abelian_) return;
    const auto n = g.size();
    to_rep_.assign(n, ~0u);
    for (const auto& c : g.conjugacy_classes()) {
      std::vector<ElemId> queue{c.representative};
      to_rep_[c.representative] = g.identity_id();
      for (std::size_t k = 0; k < queue.size(); ++k) {
        const ElemId z = queue[k];
        for (ElemId h : g.generator_ids()) {
          const ElemId y = g.conjugate(h, z);
          if (to_rep_[y] != ~0u) continue;
          // y = h z h^-1 and rep = c_z z c_z^-1, so c_y = c_z h^-1.
          to_rep_[y] = g.mul(to_rep_[z], g.inv(h));
          queue.push_back(y);
        }
      }
      centralizers_.emplace(c.representative, g.centralizer(c.representative));
    }
  }

  IdTuple operator()(const IdTuple& t) const {
    if (abelian_) return t;
    const ElemId c = to_rep_[t[0]];
    IdTuple u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = g_.conjugate(c, t[i]);
    IdTuple best = u, v(t.size());
    for (ElemId z : centralizers_.at(u[0])) {
      v[0] = u[0];
      bool less = false, decided = false;
      for (std::size_t i = 1; i < t.size(); ++i) {
        v[i] = g_.conjugate(z, u[i]);
        if (!decided && v[i] != best[i]) {
          decided = true;
          less = v[i] < best[i];
          if (!less) break;
        }
      }
      if (less) best = v;
    }
    return best;
  }

 private:
  const GroupHandle& g_;
  bool abelian_;
  std::vector<ElemId> to_rep_;
  std::unordered_map<ElemId, std::vector<ElemId>> centralizers_;
};

class OrbitSpace {
 public:
  OrbitSpace(const GroupHandle& g, const TypeVector& tau, std::uint64_t budget, unsigned threads)
      : g_(g), tau_(tau), canon_(g) {
    auto candidates = enumerate_system_ids(g, tau, {.up_to_inner = true, .budget = budget, .threads = threads});
    std::vector<char> keep(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) { keep[i] = canon_(candidates[i]) == candidates[i]; });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (keep[i]) reps_.push_back(std::move(candidates[i]));
    }
    if (reps_.size() > budget) {
      throw Error(ErrorKind::budget_exceeded, std::to_string(reps_.size()) + " orbit representatives exceed budget");
    }
    index_.reserve(reps_.size() * 2);
    for (std::uint32_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);
    // A generating tuple is fixed exactly by the center under conjugation.
    conj_orbit_ = g.order() / g.center_order();
  }

  std::size_t size() const { return reps_.size(); }
  const IdTuple& rep(std::size_t i) const { return reps_[i]; }
  std::uint64_t conjugation_orbit_size() const { return conj_orbit_; }
  std::uint32_t find(const IdTuple& t) const { return index_.at(canon_(t)); }

 private:
  const GroupHandle& g_;
  TypeVector tau_;
  Canonicalizer canon_;
  std::vector<IdTuple> reps_;
  std::unordered_map<IdTuple, std::uint32_t, TupleHash> index_;
  std::uint64_t conj_orbit_ = 1;
};

}  // namespace hurwitz::detail
