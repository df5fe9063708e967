#include <algorithm>
#include <set>

#include "doctest.h"
#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

SphericalSystem sys(const GroupHandle& g, std::vector<std::vector<std::int32_t>> codes) {
  std::vector<Element> elems;
  for (auto& c : codes) elems.push_back(Element{std::move(c)});
  return SphericalSystem(g, std::move(elems));
}

std::multiset<std::uint32_t> class_multiset(const SphericalSystem& t) {
  const auto& g = t.group();
  std::multiset<std::uint32_t> out;
  for (const auto& e : t.elements()) out.insert(g.class_of(g.id(e)));
  return out;
}

// Number of braid orbits on ordered systems by plain breadth-first search.
std::uint64_t naive_braid_orbits(const GroupHandle& g, const TypeVector& tau) {
  const auto systems = enumerate_system_ids(g, tau);
  std::set<IdTuple> seen;
  std::uint64_t orbits = 0;
  for (const auto& t : systems) {
    if (seen.count(t)) continue;
    ++orbits;
    std::vector<IdTuple> stack{t};
    seen.insert(t);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          auto v = u;
          dir ? braid_move_ids(g, v, i) : braid_move_inverse_ids(g, v, i);
          if (seen.insert(v).second) stack.push_back(v);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("braid move formula and invariants") {
  const auto g = make_group(symmetric_spec(3));
  const auto t = sys(g, {{2, 1, 3}, {1, 3, 2}, {2, 3, 1}});
  const auto moved = braid_move(t, 1);
  const auto& x = t.elements();
  CHECK(moved.elements()[0] == g.multiply(g.multiply(x[0], x[1]), g.inverse(x[0])));
  CHECK(moved.elements()[1] == x[0]);
  CHECK(moved.elements()[2] == x[2]);
  CHECK(moved.type() == t.type());
  CHECK(class_multiset(moved) == class_multiset(t));
  CHECK(braid_move_inverse(moved, 1).elements() == t.elements());
  CHECK(braid_move(braid_move_inverse(t, 2), 2).elements() == t.elements());
  CHECK_THROWS_AS(braid_move(t, 0), Error);
  CHECK_THROWS_AS(braid_move(t, 3), Error);
}

TEST_CASE("braid move in an abelian group swaps") {
  const auto g = make_group(abelian_spec({5, 5}));
  const auto t = sys(g, {{1, 0}, {0, 1}, {4, 4}});
  const auto moved = braid_move(t, 2);
  CHECK(moved.elements()[1] == t.elements()[2]);
  CHECK(moved.elements()[2] == t.elements()[1]);
  CHECK(braid_orbit(t).size() == 6);
}

TEST_CASE("count_d on small instances") {
  SUBCASE("ab:5,5 has 80 orbits of unordered triples") {
    const auto r = count_d(make_group(abelian_spec({5, 5})), TypeVector({5, 5, 5}), {.verify = true});
    CHECK(r.count == 80);
    CHECK(r.cross_checked);
  }
  SUBCASE("psl2:7 (2,3,7)") {
    const auto g = make_group(psl2_spec(7));
    CHECK(count_d(g, TypeVector({2, 3, 7}), {.verify = true}).count == 2);
    CHECK(count_d_aut(g, TypeVector({2, 3, 7})).count == 1);
  }
  SUBCASE("thread count does not change the report") {
    const auto g = make_group(psl2_spec(11));
    const auto a = count_d(g, TypeVector({3, 5, 11}), {.threads = 1});
    const auto b = count_d(g, TypeVector({3, 5, 11}), {.threads = 4});
    CHECK(a.json() == b.json());
  }
}

TEST_CASE("braid orbit count against breadth-first search") {
  for (const auto& [spec, tau] : std::vector<std::pair<GroupSpec, TypeVector>>{
           {symmetric_spec(4), TypeVector({2, 3, 4})},
           {alternating_spec(5), TypeVector({2, 5, 5})},
           {symmetric_spec(3), TypeVector({2, 2, 2, 2})},
           {dihedral_spec(4), TypeVector({2, 2, 2, 2})}}) {
    const auto g = make_group(spec);
    CAPTURE(spec.str());
    CHECK(count_braid_orbits(g, tau).count == naive_braid_orbits(g, tau));
  }
}

TEST_CASE("count_h") {
  SUBCASE("S3 has no structure") {
    CHECK(count_h(make_group(symmetric_spec(3)), TypeVector({2, 2, 3}), TypeVector({2, 2, 3})).count == 0);
  }
  SUBCASE("A5 has no Beauville structure") {
    const auto g = make_group(alternating_spec(5));
    CHECK(count_h(g, TypeVector({2, 5, 5}), TypeVector({3, 3, 5})).count == 0);
    CHECK(count_h(g, TypeVector({2, 3, 5}), TypeVector({5, 5, 5})).count == 0);
  }
  SUBCASE("ab:5,5 lies in the published range and respects the bounds") {
    const auto g = make_group(abelian_spec({5, 5}));
    const TypeVector tau({5, 5, 5});
    const auto h = count_h(g, tau, tau).count;
    CHECK(h >= 1);
    CHECK(h <= 4);
    const auto d = count_d(g, tau).count;
    CHECK(h <= d * d);
    CHECK(class_tuple_lower_bound(g, tau, tau).count <= h);
  }
  SUBCASE("swap invariance and bounds on psl2:13") {
    const auto g = make_group(psl2_spec(13));
    const TypeVector a({2, 3, 7}), b({13, 13, 13});
    const auto h = count_h(g, a, b).count;
    CHECK(h == count_h(g, b, a).count);
    CHECK(h > 0);
    CHECK(h <= count_d(g, a).count * count_d(g, b).count);
    CHECK(class_tuple_lower_bound(g, a, b).count <= h);
  }
}

TEST_CASE("almost homogeneous classes") {
  const auto shapes = choose_almost_homogeneous_classes(30, {2, 2});
  REQUIRE(shapes.size() == 2);
  CHECK(shapes[0] == std::vector<std::int32_t>(14, 2));
  CHECK(shapes[1] == std::vector<std::int32_t>(12, 2));
  for (const auto& s : choose_almost_homogeneous_classes(24, {3, 4, 5, 6}, 2)) {
    CHECK(perm::type_is_even(s));
  }
  try {
    choose_almost_homogeneous_classes(3, {2, 2});
    FAIL("expected n-too-small");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::n_too_small);
    CHECK(std::string(e.what()).find("least feasible n") != std::string::npos);
  }
}

TEST_CASE("class-tuple lower bound on an alternating group") {
  const auto g = make_group(alternating_spec(9), {.enumeration_cap = 0, .allow_unenumerated = true});
  const auto r = class_tuple_lower_bound(g, TypeVector({3, 6, 7}), TypeVector({4, 5, 6}), {.trials_per_tuple = 5000});
  CHECK(r.method == "randomized");
  CHECK(r.count >= 1);
  CHECK(r.count <= r.candidate_pairs);
}
