#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/spherical.hpp"

namespace hurwitz {

/// sigma_i (1-based): (x_i, x_{i+1}) -> (x_i x_{i+1} x_i^-1, x_i). Throws index-out-of-range.
SphericalSystem braid_move(const SphericalSystem& t, std::size_t i);
/// sigma_i^-1: (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^-1 x_i x_{i+1}).
SphericalSystem braid_move_inverse(const SphericalSystem& t, std::size_t i);

// Id-level moves, 0-based position.
void braid_move_ids(const GroupHandle& g, IdTuple& t, std::size_t i);
void braid_move_inverse_ids(const GroupHandle& g, IdTuple& t, std::size_t i);

/// Closure of {t} under all braid moves and their inverses (breadth first,
/// sorted by encoding). Throws budget-exceeded above `budget` members.
std::vector<IdTuple> braid_orbit_ids(const GroupHandle& g, const IdTuple& t, std::uint64_t budget = 10'000'000);
std::vector<SphericalSystem> braid_orbit(const SphericalSystem& t, std::uint64_t budget = 10'000'000);

struct OrbitReport {
  std::string group;
  TypeVector tau1;
  std::optional<TypeVector> tau2;  // absent for d(G; tau)
  std::uint64_t count = 0;
  // (orbit size, number of orbits of that size), sizes descending. Sizes are
  // measured in acted-upon objects: ordered systems for d, pairs of ordered
  // systems (unordered when tau1 = tau2) for h.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
  std::uint64_t objects = 0;
  std::string method;  // exhaustive-orbit | closed-form | lower-bound
  bool cross_checked = false;
  double seconds = 0;

  /// One json object, no trailing newline. `seconds` only when `with_time`.
  std::string json(bool with_time = false) const;
};

struct CountOptions {
  // Re-derive the count by plain braid-move union-find over all ordered systems.
  bool verify = false;
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;  // stored states
};

/// d(G; tau) for |tau| = 3: orbits of G-conjugation on the unordered triples
/// T^un, i.e. of conjugation together with the six reorderings
/// (x,y,z) -> (y,z,x), (y,x,(yx)^-1).
OrbitReport count_d(const GroupHandle& g, const TypeVector& tau, const CountOptions& options = {});

/// Orbits of Aut(G) together with the reorderings on T^un (|tau| = 3). For
/// PSL(2,p) these are the PGL(2,p) orbits counted by d'. Throws aut-unavailable.
OrbitReport count_d_aut(const GroupHandle& g, const TypeVector& tau, const CountOptions& options = {});

/// Number of B_r orbits on ordered systems of type tau, any r >= 3.
OrbitReport count_braid_orbits(const GroupHandle& g, const TypeVector& tau, const CountOptions& options = {});

/// h(G; tau1, tau2): orbits of (B_r1 x B_r2) x Aut(G) on disjoint pairs, with
/// the pair swap when tau1 = tau2. Throws aut-unavailable, budget-exceeded.
OrbitReport count_h(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                    const CountOptions& options = {});

enum class ClassCandidates { all, almost_homogeneous };

struct LowerBoundOptions {
  ClassCandidates candidates = ClassCandidates::all;
  // Randomized witness search is used for permutation groups when the group
  // is not enumerated or candidates are almost homogeneous.
  std::uint64_t trials_per_tuple = 200'000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
};

struct LowerBoundResult {
  std::uint64_t count = 0;
  std::uint64_t candidate_pairs = 0;  // class-tuple pairs with distinct, disjoint classes
  std::string method;                 // exhaustive | randomized
  // Realized pairs, each as two lists of class labels.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> witnesses;
};

/// Certified lower bound for h: pairs of Aut(G)-class tuples, all classes
/// distinct, realized by a disjoint pair of systems.
LowerBoundResult class_tuple_lower_bound(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                         const LowerBoundOptions& options = {});

/// Cycle shapes (m^j, 1^f) for each requested order (k shapes per order),
/// even, with pairwise distinct fixed-point counts f. Throws n-too-small
/// naming the least n that works.
std::vector<std::vector<std::int32_t>> choose_almost_homogeneous_classes(int n, const std::vector<std::uint32_t>& orders,
                                                                         int k = 1);

}  // namespace hurwitz
