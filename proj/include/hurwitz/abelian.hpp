#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/invariants.hpp"
#include "hurwitz/spherical.hpp"

namespace hurwitz::abelian {

/// Invariant factors n1 | ... | nt (factors equal to 1 dropped) with the
/// exponent table l_i(p).
struct AbelianProfile {
  std::vector<std::int64_t> factors;

  /// Throws invalid-spec when the divisibility chain is broken.
  explicit AbelianProfile(std::vector<std::int64_t> factors);
  std::size_t rank() const { return factors.size(); }
  /// Exponent of p in n_i, 1-based i; 0 outside 1..t.
  int l(std::size_t i, std::int64_t p) const;
  std::int64_t order() const;
};

/// All invariant-factor chains of groups of order n, each as nontrivial
/// factors (the trivial group gives an empty chain).
std::vector<std::vector<std::int64_t>> groups_of_order(std::int64_t n);

struct Admission {
  bool admits = false;
  std::string reason;  // the first failing condition; empty when admitted
};

/// The classification of abelian groups with an unmixed ramification
/// structure of size (r1, r2).
Admission admits_structure(const AbelianProfile& profile, std::size_t r1, std::size_t r2);

using Quadruple = std::array<std::int64_t, 4>;

struct NpResult {
  std::uint64_t count = 0;
  std::vector<Quadruple> quadruples;  // lexicographic
};

/// Quadruples (a,b,c,d) of units mod p with a-b, a+c, c-d, b+d, a+c-b-d,
/// ad-bc all units, by exhaustive scan. Throws p-too-small below 5.
NpResult count_Np(std::int64_t p);
/// (p-1)(p-2)(p-3)(p-4).
std::uint64_t Np_formula(std::int64_t p);

struct Rank2Bounds {
  std::uint64_t N = 0;
  Rational lower;  // N/72
  Rational upper;  // N/6
};

/// Bounds on h((Z/n)^2; (n,n,n), (n,n,n)). Throws invalid-n unless
/// gcd(n, 6) = 1 and n >= 5.
Rank2Bounds hurwitz_bounds_rank2(std::int64_t n);

/// Structure of type ((p^(r+1)), (p^(r+1))) on (Z/p)^r from the standard
/// pattern and the first valid quadruple, re-validated. Throws p-too-small
/// below 5, construction-failure if validation fails.
RamificationStructure construct_structure_zpzr(std::int64_t p, int r);

struct ZpzrBounds {
  // Aut(G)-orbits on disjoint ordered pairs.
  std::uint64_t orbit_lower = 0;
  std::uint64_t orbit_upper = 0;  // |GL(r,p)|
  // h after the symmetric-group factors: orbit_lower / (2 ((r+1)!)^2) and
  // orbit_upper / (r+1)!.
  Rational h_lower;
  Rational h_upper;
};

/// Throws p-too-small unless p > 5 and prime, precondition for r < 2.
ZpzrBounds count_h_zpzr_bounds(std::int64_t p, int r);

/// |GL(k, p)|, 1 for k = 0.
std::uint64_t gl_order(int k, std::int64_t p);

}  // namespace hurwitz::abelian
