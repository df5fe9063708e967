#include "hurwitz/invariants.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

GenusResult genus_rh(std::uint64_t group_order, std::uint64_t g_prime, std::span<const std::uint32_t> orders) {
  Rational sum(2 * as_int(g_prime) - 2);
  for (auto m : orders) {
    if (m < 2) throw Error(ErrorKind::precondition, "branch orders must be at least 2");
    sum += Rational(as_int(m) - 1, as_int(m));
  }
  const Rational g = Rational(as_int(group_order)) * sum / 2 + 1;
  return {g, g.denominator() == 1};
}

Rational orbifold_excess(const TypeVector& tau) {
  Rational sum(-2);
  for (auto m : tau.orders) sum += Rational(as_int(m) - 1, as_int(m));
  return sum;
}

Rational mu(const TypeVector& tau) {
  if (tau.size() != 3) throw Error(ErrorKind::precondition, "mu is defined for types of size 3");
  Rational sum(0);
  for (auto m : tau.orders) sum += Rational(1, as_int(m));
  return sum;
}

SurfaceInvariants surface_invariants(std::uint64_t group_order, const TypeVector& tau1, const TypeVector& tau2) {
  const Rational a1 = orbifold_excess(tau1), a2 = orbifold_excess(tau2);
  for (const auto* t : {&tau1, &tau2}) {
    if (orbifold_excess(*t) <= 0) throw Error(ErrorKind::non_hyperbolic, "type " + t->str() + " is not hyperbolic");
  }
  const Rational order(as_int(group_order));
  const Rational chi = order * a1 * a2 / 4;
  const Rational g1 = order * a1 / 2 + 1, g2 = order * a2 / 2 + 1;
  if (chi.denominator() != 1) {
    throw Error(ErrorKind::non_realizable, "chi = " + std::to_string(chi.numerator()) + "/" +
                                               std::to_string(chi.denominator()) + " is not an integer");
  }
  if (g1.denominator() != 1 || g2.denominator() != 1) {
    throw Error(ErrorKind::non_realizable, "a curve genus is not an integer");
  }
  if (g1 < 2 || g2 < 2) throw Error(ErrorKind::non_realizable, "a curve genus is below 2");
  SurfaceInvariants inv;
  inv.genus1 = g1.numerator();
  inv.genus2 = g2.numerator();
  inv.chi = chi.numerator();
  inv.k2 = 8 * inv.chi;
  inv.euler = 4 * inv.chi;
  inv.pg = inv.chi - 1;
  return inv;
}

SurfaceInvariants surface_invariants(const RamificationStructure& s) {
  return surface_invariants(s.first.group().order(), s.first.type(), s.second.type());
}

bool identities_hold(const SurfaceInvariants& inv, std::uint64_t group_order) {
  return inv.k2 == 8 * inv.chi && inv.euler == 4 * inv.chi && inv.pg == inv.chi - 1 &&
         inv.euler * as_int(group_order) == 4 * (inv.genus1 - 1) * (inv.genus2 - 1);
}

ChiBounds chi_bounds(std::uint64_t group_order, std::size_t r1, std::size_t r2) {
  const Rational order(as_int(group_order));
  return {order / (4 * 42 * 42), order * (as_int(r1) - 2) * (as_int(r2) - 2) / 4};
}

bool genus_ge_2(std::uint64_t group_order, const TypeVector& tau) {
  const auto g = genus_rh(group_order, 0, tau.orders);
  return g.integral && g.genus >= 2;
}

bool check_genus_ge_2(const RamificationStructure& s) {
  const auto order = s.first.group().order();
  return genus_ge_2(order, s.first.type()) && genus_ge_2(order, s.second.type());
}

}  // namespace hurwitz
