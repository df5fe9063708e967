#pragma once

#include <cstdint>
#include <span>

#include <boost/rational.hpp>

#include "hurwitz/spherical.hpp"

namespace hurwitz {

using Rational = boost::rational<std::int64_t>;

struct GenusResult {
  Rational genus;
  bool integral = false;
};

/// Solves 2g - 2 = |G| (2g' - 2 + sum (1 - 1/m_i)) exactly.
GenusResult genus_rh(std::uint64_t group_order, std::uint64_t g_prime, std::span<const std::uint32_t> orders);

/// -2 + sum (1 - 1/m_i); positive exactly when the orbifold is hyperbolic.
Rational orbifold_excess(const TypeVector& tau);

/// 1/m1 + 1/m2 + 1/m3 for a type of size 3.
Rational mu(const TypeVector& tau);

struct SurfaceInvariants {
  std::int64_t genus1 = 0;
  std::int64_t genus2 = 0;
  std::int64_t chi = 0;
  std::int64_t k2 = 0;
  std::int64_t euler = 0;
  std::int64_t pg = 0;  // q = 0
};

/// Invariants of (C1 x C2)/G with both quotients P^1. Throws non-hyperbolic
/// when a side has no positive excess, non-realizable when chi or a genus is
/// not an integer or a genus is below 2.
SurfaceInvariants surface_invariants(std::uint64_t group_order, const TypeVector& tau1, const TypeVector& tau2);
SurfaceInvariants surface_invariants(const RamificationStructure& s);

/// K^2 = 8 chi, e = 4 chi, p_g = chi - 1 and e |G| = 4 (g1 - 1)(g2 - 1).
bool identities_hold(const SurfaceInvariants& inv, std::uint64_t group_order);

struct ChiBounds {
  Rational lower;  // |G| / (4 * 42^2)
  Rational upper;  // (r1 - 2)(r2 - 2) |G| / 4
};
ChiBounds chi_bounds(std::uint64_t group_order, std::size_t r1, std::size_t r2);

/// Genus of C = H/K for the side of type tau is an integer >= 2.
bool genus_ge_2(std::uint64_t group_order, const TypeVector& tau);
/// Both sides of the structure.
bool check_genus_ge_2(const RamificationStructure& s);

}  // namespace hurwitz
