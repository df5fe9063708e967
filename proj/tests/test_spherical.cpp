#include <set>

#include "doctest.h"
#include "hurwitz/error.hpp"
#include "hurwitz/spherical.hpp"

using namespace hurwitz;

namespace {

Element el(std::vector<std::int32_t> code) { return Element{std::move(code)}; }

SphericalSystem sys(const GroupHandle& g, std::vector<std::vector<std::int32_t>> codes) {
  std::vector<Element> elems;
  for (auto& c : codes) elems.push_back(el(std::move(c)));
  return SphericalSystem(g, std::move(elems));
}

// Ordered r-tuples with product 1, sorted orders tau, generating G, by plain
// nested loops over all of G^(r-1).
std::uint64_t naive_count(const GroupHandle& g, const TypeVector& tau) {
  const auto n = static_cast<ElemId>(g.size());
  const std::size_t r = tau.size();
  std::uint64_t count = 0;
  std::vector<ElemId> t(r - 1, 0);
  while (true) {
    ElemId prod = g.identity_id();
    for (auto x : t) prod = g.mul(prod, x);
    std::vector<ElemId> full = t;
    full.push_back(g.inv(prod));
    std::vector<std::uint32_t> orders;
    for (auto x : full) orders.push_back(g.order_of(x));
    std::sort(orders.begin(), orders.end());
    if (orders == tau.orders && g.generates(full)) ++count;
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == n) t[i++] = 0;
    if (i == t.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("type vectors and hyperbolicity") {
  CHECK(TypeVector({3, 2, 7}) == TypeVector({2, 3, 7}));
  CHECK(TypeVector::parse("7,3,2").str() == "2,3,7");
  CHECK_THROWS_AS(TypeVector({2, 3}), Error);
  CHECK_THROWS_AS(TypeVector({1, 3, 3}), Error);
  CHECK(is_hyperbolic(2, 3, 7));
  CHECK_FALSE(is_hyperbolic(3, 3, 3));
  CHECK_FALSE(is_hyperbolic(2, 3, 5));
  CHECK_FALSE(is_hyperbolic(2, 4, 4));
  CHECK(is_hyperbolic(2, 4, 5));
}

TEST_CASE("spherical system recognition") {
  auto ab = make_group(abelian_spec({5, 5}));
  std::vector<Element> t{el({1, 0}), el({0, 1}), el({4, 4})};
  auto type = is_spherical_system(ab, t);
  REQUIRE(type);
  CHECK(type->str() == "5,5,5");

  auto s3 = make_group(symmetric_spec(3));
  std::vector<Element> u{el({2, 1, 3}), el({1, 3, 2}), el({2, 3, 1})};
  auto type3 = is_spherical_system(s3, u);
  REQUIRE(type3);
  CHECK(type3->str() == "2,2,3");
  // product is not the identity with the 3-cycle inverted
  std::vector<Element> bad{el({2, 1, 3}), el({1, 3, 2}), el({3, 1, 2})};
  CHECK_FALSE(is_spherical_system(s3, bad));

  std::vector<Element> two{el({1, 0}), el({4, 0})};
  try {
    is_spherical_system(ab, two);
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  std::vector<Element> foreign{el({1, 0}), el({0, 7}), el({4, 4})};
  try {
    is_spherical_system(ab, foreign);
    FAIL("expected foreign-element");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::foreign_element);
  }
  // non-generating: entries inside one line
  std::vector<Element> line{el({1, 0}), el({2, 0}), el({2, 0})};
  CHECK_FALSE(is_spherical_system(ab, line));
}

TEST_CASE("sigma sets") {
  auto ab = make_group(abelian_spec({5, 5}));
  auto t = sys(ab, {{1, 0}, {0, 1}, {4, 4}});
  auto s = sigma_set(t);
  CHECK(s.size() == 13);
  CHECK(std::find(s.begin(), s.end(), ab.identity()) != s.end());

  auto z7 = make_group(abelian_spec({7}));
  CHECK(sigma_set(sys(z7, {{1}, {1}, {5}})).size() == 7);

  auto psl = make_group(psl2_spec(7));
  auto systems = enumerate_systems(psl, TypeVector({2, 3, 7}), {.up_to_inner = true});
  REQUIRE(!systems.empty());
  std::size_t involutions = 0;
  for (const auto& e : sigma_set(systems.front())) involutions += psl.element_order(e) == 2;
  CHECK(involutions == 21);

  // Sigma is closed under conjugation and powers
  for (const auto& spec : {"alt:5", "sym:4", "psl2:7", "dih:6"}) {
    auto g = make_group(GroupSpec::parse(spec));
    for (const auto& tau : {TypeVector({2, 3, 5}), TypeVector({2, 4, 4}), TypeVector({3, 3, 4}),
                            TypeVector({2, 3, 7}), TypeVector({2, 2, 6})}) {
      for (const auto& sy : enumerate_systems(g, tau, {.up_to_inner = true})) {
        auto members = sigma_set(sy);
        std::set<Element> set(members.begin(), members.end());
        for (const auto& x : members) {
          CHECK(set.count(g.multiply(x, x)));
          for (const auto& h : g.generators()) CHECK(set.count(g.multiply(g.multiply(h, x), g.inverse(h))));
        }
      }
    }
  }
}

TEST_CASE("disjointness") {
  auto ab = make_group(abelian_spec({5, 5}));
  auto t1 = sys(ab, {{1, 0}, {0, 1}, {4, 4}});
  auto t2 = sys(ab, {{1, 2}, {3, 4}, {1, 4}});
  CHECK(are_disjoint(t1, t2));
  CHECK(are_disjoint(t2, t1));
  CHECK_FALSE(are_disjoint(t1, t1));
  CHECK_NOTHROW(RamificationStructure(t1, t2));
  CHECK_THROWS_AS(RamificationStructure(t1, t1), Error);

  auto psl = make_group(psl2_spec(7));
  auto a = enumerate_systems(psl, TypeVector({2, 3, 7}), {.up_to_inner = true});
  auto b = enumerate_systems(psl, TypeVector({2, 4, 7}), {.up_to_inner = true});
  REQUIRE(!a.empty());
  REQUIRE(!b.empty());
  for (const auto& x : a) {
    for (const auto& y : b) CHECK_FALSE(are_disjoint(x, y));
  }

  auto z7 = make_group(abelian_spec({7}));
  auto other = sys(z7, {{1}, {1}, {5}});
  try {
    are_disjoint(t1, other);
    FAIL("expected group-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::group_mismatch);
  }
}

TEST_CASE("system enumeration") {
  auto ab = make_group(abelian_spec({5, 5}));
  CHECK(enumerate_system_ids(ab, TypeVector({5, 5, 5})).size() == 480);
  CHECK(enumerate_system_ids(make_group(symmetric_spec(3)), TypeVector({2, 2, 2})).empty());
  CHECK(enumerate_system_ids(make_group(alternating_spec(4)), TypeVector({2, 2, 2})).empty());

  struct Case {
    const char* group;
    std::vector<std::uint32_t> type;
  };
  const std::vector<Case> cases = {{"sym:3", {2, 2, 3}},  {"alt:4", {2, 3, 3}}, {"alt:4", {3, 3, 3}},
                                   {"sym:4", {2, 3, 4}},  {"dih:5", {2, 2, 5}}, {"ab:3,3", {3, 3, 3}},
                                   {"ab:2,4", {2, 4, 4}}, {"sym:4", {2, 2, 2, 3}}, {"alt:5", {2, 3, 5}},
                                   {"ab:2,2", {2, 2, 2, 2}}};
  for (const auto& c : cases) {
    auto g = make_group(GroupSpec::parse(c.group));
    TypeVector tau(c.type);
    auto full = enumerate_system_ids(g, tau);
    CHECK(full.size() == naive_count(g, tau));
    CHECK(std::is_sorted(full.begin(), full.end()));
    // up to inner: weight each x1 = class representative by its class size
    auto reduced = enumerate_system_ids(g, tau, {.up_to_inner = true});
    std::uint64_t weighted = 0;
    for (const auto& t : reduced) weighted += g.conjugacy_classes()[g.class_of(t[0])].size;
    CHECK(weighted == full.size());
    CHECK(enumerate_system_ids(g, tau, {.threads = 4}) == full);
    for (const auto& sy : enumerate_systems(g, tau)) CHECK(sy.type() == tau);
  }
  try {
    enumerate_system_ids(make_group(psl2_spec(13)), TypeVector({7, 7, 7, 7}), {.budget = 1000});
    FAIL("expected budget-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}

TEST_CASE("serialization round trip") {
  auto ab = make_group(abelian_spec({5, 5}));
  auto t = sys(ab, {{1, 0}, {0, 1}, {4, 4}});
  CHECK(t.serialize() == "ab:5,5\t5,5,5\t1,0;0,1;4,4");
  auto back = SphericalSystem::deserialize(t.serialize());
  CHECK(back.elements() == t.elements());
  CHECK_THROWS_AS(SphericalSystem::deserialize("ab:5,5\t5,5,6\t1,0;0,1;4,4"), Error);
}

TEST_CASE("structure search") {
  auto ab = make_group(abelian_spec({5, 5}));
  TypeVector p3({5, 5, 5});
  auto found = exists_unmixed_structure(ab, p3, p3);
  REQUIRE(found.outcome == SearchResult::Outcome::found);
  CHECK(are_disjoint(found.structure->first, found.structure->second));
  auto random = exists_unmixed_structure(ab, p3, p3, {.mode = SearchMode::randomized, .trials = 10000});
  CHECK(random.outcome == SearchResult::Outcome::found);

  auto a5 = make_group(alternating_spec(5));
  CHECK(exists_unmixed_structure_sizes(a5, 3, 3).outcome == SearchResult::Outcome::none);
  CHECK(exists_unmixed_structure_sizes(a5, 3, 3, {.mode = SearchMode::randomized, .trials = 2000}).outcome ==
        SearchResult::Outcome::inconclusive);
  // A5 does admit structures once one side has size 4
  auto bigger = exists_unmixed_structure_sizes(a5, 4, 4);
  CHECK(bigger.outcome == SearchResult::Outcome::found);

  for (int n = 3; n <= 12; ++n) {
    auto d = make_group(dihedral_spec(n));
    for (std::size_t r2 = 3; r2 <= 4; ++r2) {
      auto res = exists_unmixed_structure(d, SideConstraint::of_type(TypeVector({2, 2, static_cast<std::uint32_t>(n)})),
                                          SideConstraint::of_size(r2));
      CHECK(res.outcome == SearchResult::Outcome::none);
    }
  }
  try {
    exists_unmixed_structure_sizes(a5, 3, 3, {.state_budget = 100});
    FAIL("expected budget-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}
