#include "doctest.h"
#include "hurwitz/error.hpp"
#include "hurwitz/invariants.hpp"

using namespace hurwitz;

namespace {

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::usage;
}

}  // namespace

TEST_CASE("Riemann-Hurwitz") {
  const std::vector<std::uint32_t> five{5, 5, 5};
  auto g = genus_rh(25, 0, five);
  CHECK(g.integral);
  CHECK(g.genus == Rational(6));
  const std::vector<std::uint32_t> hurwitz_type{2, 3, 7};
  g = genus_rh(168, 0, hurwitz_type);
  CHECK(g.genus == Rational(3));
  const std::vector<std::uint32_t> odd{2, 3, 7};
  CHECK_FALSE(genus_rh(10, 0, odd).integral);
  CHECK(genus_ge_2(25, TypeVector({5, 5, 5})));
  CHECK_FALSE(genus_ge_2(6, TypeVector({2, 2, 3})));
}

TEST_CASE("surface invariants of the (Z/5)^2 prototype") {
  const auto inv = surface_invariants(25, TypeVector({5, 5, 5}), TypeVector({5, 5, 5}));
  CHECK(inv.chi == 1);
  CHECK(inv.k2 == 8);
  CHECK(inv.euler == 4);
  CHECK(inv.genus1 == 6);
  CHECK(inv.genus2 == 6);
  CHECK(inv.pg == 0);
  CHECK(identities_hold(inv, 25));
}

TEST_CASE("invariant identities hold wherever realizable") {
  for (std::uint64_t order : {60, 168, 336, 1092}) {
    for (const auto& t1 : {TypeVector({2, 3, 7}), TypeVector({5, 5, 5}), TypeVector({3, 3, 4}), TypeVector({2, 2, 2, 3})}) {
      for (const auto& t2 : {TypeVector({7, 7, 7}), TypeVector({4, 4, 4}), TypeVector({3, 3, 3, 3})}) {
        try {
          const auto inv = surface_invariants(order, t1, t2);
          CHECK(identities_hold(inv, order));
          const auto b = chi_bounds(order, t1.size(), t2.size());
          CHECK(b.lower <= Rational(inv.chi));
          CHECK(Rational(inv.chi) <= b.upper);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::non_realizable);
        }
      }
    }
  }
}

TEST_CASE("invariant errors") {
  CHECK(kind_of([] { surface_invariants(24, TypeVector({2, 3, 6}), TypeVector({5, 5, 5})); }) ==
        ErrorKind::non_hyperbolic);
  CHECK(kind_of([] { surface_invariants(7, TypeVector({5, 5, 5}), TypeVector({5, 5, 5})); }) ==
        ErrorKind::non_realizable);
}

TEST_CASE("mu and hyperbolicity") {
  CHECK(mu(TypeVector({5, 5, 5})) == Rational(3, 5));
  CHECK(mu(TypeVector({2, 3, 6})) == Rational(1));
  for (std::uint32_t a = 2; a <= 12; ++a) {
    for (std::uint32_t b = a; b <= 12; ++b) {
      for (std::uint32_t c = b; c <= 12; ++c) {
        const TypeVector t({a, b, c});
        CHECK((mu(t) < Rational(1)) == is_hyperbolic(a, b, c));
        CHECK((orbifold_excess(t) > Rational(0)) == is_hyperbolic(a, b, c));
      }
    }
  }
}

TEST_CASE("chi bounds") {
  const auto b = chi_bounds(25, 3, 3);
  CHECK(b.lower == Rational(25, 7056));
  CHECK(b.upper == Rational(25, 4));
}
