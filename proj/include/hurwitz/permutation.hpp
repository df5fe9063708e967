#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hurwitz::perm {

// Permutations of {1..n} as 1-based image sequences: p[i-1] is the image of i.
using Perm = std::vector<std::int32_t>;
// Cycle lengths >= 2 in descending order; fixed points omitted.
using CycleType = std::vector<std::int32_t>;

Perm identity(int n);
/// Left-to-right: apply a, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_valid(const Perm& p);
bool is_even(const Perm& p);
CycleType cycle_type(const Perm& p);
std::uint64_t order(const Perm& p);
std::uint64_t order_of_type(const CycleType& type);
bool type_is_even(const CycleType& type);
int moved_points(const CycleType& type);
/// Permutation with the given cycle type on points 1..n, cycles laid out consecutively.
Perm from_cycle_type(const CycleType& type, int n);
/// Cycle types of all powers of an element of the given type.
std::vector<CycleType> power_types(const CycleType& type);
/// All cycle types of permutations of degree n with exactly this order.
std::vector<CycleType> types_of_order(int n, std::uint64_t order);
Perm random_perm(int n, std::mt19937_64& rng);

/// Order of the group generated by `gens` (deterministic Schreier-Sims).
std::uint64_t group_order(std::span<const Perm> gens, int n);

}  // namespace hurwitz::perm
