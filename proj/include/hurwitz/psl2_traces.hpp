#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/spherical.hpp"

namespace hurwitz::psl2 {

using Triple = std::array<std::uint32_t, 3>;

/// Residues alpha mod p that occur as the trace of an SL(2,p) preimage of a
/// PSL(2,p) element of order l. Closed under negation.
struct TraceSet {
  int p = 0;
  std::uint32_t l = 0;
  std::vector<int> traces;  // ascending
};

/// Exhaustive scan of SL(2,p): every non-central matrix is keyed by its trace
/// and the order of its image. Throws precondition unless p is an odd prime
/// and l >= 2.
TraceSet trace_set(int p, std::uint32_t l);

/// |T_l| by the case split: 2 for l = p, 1 for l = 2, phi(l) when l >= 3
/// divides (p-1)/2 or (p+1)/2, and 0 otherwise.
std::uint64_t trace_set_size_formula(int p, std::uint32_t l);

/// Order in PSL(2,p) of a non-central matrix with trace alpha, for each alpha.
std::vector<std::uint32_t> trace_orders(int p);

/// Number of sign classes (+-a, +-b, +-c), a in T_l, b in T_m, c in T_n, up to
/// permuting positions of equal order, for which a^2+b^2+c^2 - abc != 4 or
/// a^2+b^2+c^2 + abc != 4. The triple is sorted first. Throws
/// hypothesis-violation unless m > 2 and n > 5.
std::uint64_t d_prime(int p, Triple triple);

/// The same count taken up to even sign changes only, so (a,b,c) and
/// (-a,-b,-c) stay apart, keeping the triples with a^2+b^2+c^2 - abc != 4.
/// Lifts of a PSL triple with product one determine their traces up to an
/// even number of sign changes, so this is the finer invariant.
std::uint64_t d_prime_even_sign(int p, Triple triple);

struct ClosedForm {
  std::uint64_t value = 0;
  std::string case_label;  // i .. v, or vi when bound_only
  bool bound_only = false;
};

/// Closed forms for d' in the five special cases, otherwise the bound
/// phi(l)phi(m)phi(n)/8 tagged bound_only.
ClosedForm d_prime_closed(int p, Triple triple);

/// c = phi(r1)phi(s1)phi(t1)phi(r2)phi(s2)phi(t2)/16. Throws non-hyperbolic.
std::uint64_t h_upper_bound(Triple tau1, Triple tau2);

/// gamma^2 = 3 exactly when the trace gamma has order 6, checked over F_p.
bool order_six_exclusion_holds(int p);

/// Sorted triples (l,m,n) with entries <= max_order, m > 2, n > 5, every entry
/// an element order of PSL(2,p).
std::vector<Triple> admissible_triples(int p, std::uint32_t max_order);

}  // namespace hurwitz::psl2
