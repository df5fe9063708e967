#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hurwitz/error.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/numtheory.hpp"

using namespace hurwitz;

namespace {

Element el(std::vector<std::int32_t> code) { return Element{std::move(code)}; }

// Class sizes by conjugating with every element, not just generators.
std::multiset<std::uint64_t> naive_class_sizes(const GroupHandle& g) {
  std::vector<bool> seen(g.size(), false);
  std::multiset<std::uint64_t> sizes;
  for (ElemId x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    std::set<ElemId> cls;
    for (ElemId h = 0; h < g.size(); ++h) cls.insert(g.mul(g.mul(g.inv(h), x), h));
    for (auto y : cls) seen[y] = true;
    sizes.insert(cls.size());
  }
  return sizes;
}

// Counts automorphisms by trying every image of a two-element generating set.
std::uint64_t naive_aut_count(const GroupHandle& g) {
  auto gens = g.generator_ids();
  REQUIRE(gens.size() == 2);
  std::uint64_t count = 0;
  const auto n = static_cast<ElemId>(g.size());
  for (ElemId a = 0; a < n; ++a) {
    if (g.order_of(a) != g.order_of(gens[0])) continue;
    for (ElemId b = 0; b < n; ++b) {
      if (g.order_of(b) != g.order_of(gens[1])) continue;
      std::map<ElemId, ElemId> f{{g.identity_id(), g.identity_id()}};
      std::vector<ElemId> queue{g.identity_id()};
      bool ok = true;
      for (std::size_t k = 0; k < queue.size() && ok; ++k) {
        for (int i = 0; i < 2 && ok; ++i) {
          const ElemId y = g.mul(queue[k], gens[i]);
          const ElemId fy = g.mul(f[queue[k]], i == 0 ? a : b);
          auto it = f.find(y);
          if (it == f.end()) {
            f[y] = fy;
            queue.push_back(y);
          } else {
            ok = it->second == fy;
          }
        }
      }
      std::set<ElemId> images;
      for (auto [x, y] : f) images.insert(y);
      if (ok && images.size() == n) ++count;
    }
  }
  return count;
}

const std::vector<std::string> kRegistry = {"sym:3", "sym:4",    "alt:4",      "alt:5",    "psl2:5",
                                            "psl2:7", "ab:5,5",  "ab:2,4",     "ab:3,3,3", "dih:6",
                                            "dih:7",  "z2semi:2,4", "ab:12",   "sym:5"};

}  // namespace

TEST_CASE("group orders follow the family formulas") {
  CHECK(make_group(psl2_spec(7)).order() == 168);
  CHECK(make_group(abelian_spec({5, 5})).order() == 25);
  CHECK(make_group(alternating_spec(5)).order() == 60);
  CHECK(make_group(symmetric_spec(4)).order() == 24);
  CHECK(make_group(dihedral_spec(9)).order() == 18);
  CHECK(make_group(z2_semidirect_spec(3, 6)).order() == 36);
  for (const auto& s : kRegistry) {
    auto g = make_group(GroupSpec::parse(s));
    CHECK(g.size() == g.order());
  }
}

TEST_CASE("spec grammar round trips and rejects bad input") {
  for (const auto& s : kRegistry) CHECK(GroupSpec::parse(s).str() == s);
  CHECK_THROWS_AS(GroupSpec::parse("psl2:9"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("psl2:2"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("ab:4,6"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("foo:3"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("sym:x"), Error);
  try {
    GroupSpec::parse("ab:4,6");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_spec);
  }
  try {
    make_group(alternating_spec(9));
    FAIL("expected unsupported-size");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_size);
  }
  auto lazy = make_group(alternating_spec(9), {.enumeration_cap = 20000, .allow_unenumerated = true});
  CHECK(lazy.order() == 181440);
  CHECK_FALSE(lazy.enumerated());
  CHECK_THROWS_AS(lazy.size(), Error);
}

TEST_CASE("multiplication examples") {
  auto ab = make_group(abelian_spec({5, 5}));
  CHECK(ab.multiply(el({1, 0}), el({0, 1})) == el({1, 1}));
  auto s3 = make_group(symmetric_spec(3));
  // (1 2) then (2 3): 1->2->3, 2->1, 3->2->1... image sequence [3,1,2]
  CHECK(s3.multiply(el({2, 1, 3}), el({1, 3, 2})) == el({3, 1, 2}));
  for (const auto& s : kRegistry) {
    auto g = make_group(GroupSpec::parse(s));
    for (ElemId x = 0; x < g.size(); x += 7) CHECK(g.multiply(g.element(x), g.identity()) == g.element(x));
  }
  CHECK_THROWS_AS(ab.multiply(el({5, 0}), el({0, 1})), Error);
  CHECK_THROWS_AS(s3.multiply(el({1, 1, 2}), el({1, 2, 3})), Error);
}

TEST_CASE("element orders") {
  auto psl = make_group(psl2_spec(7));
  CHECK(psl.element_order(psl.identity()) == 1);
  // trace 2, not the identity
  CHECK(psl.element_order(el({1, 1, 0, 1})) == 7);
  auto ab = make_group(abelian_spec({5, 5}));
  CHECK(ab.element_order(el({1, 2})) == 5);
  auto lazy = make_group(alternating_spec(10), {.enumeration_cap = 20000, .allow_unenumerated = true});
  CHECK(lazy.element_order(el({2, 3, 1, 5, 6, 7, 8, 4, 9, 10})) == 15);
}

TEST_CASE("conjugacy classes match exhaustive conjugation") {
  auto s3 = make_group(symmetric_spec(3));
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : s3.conjugacy_classes()) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 2, 3});
  CHECK(make_group(psl2_spec(7)).conjugacy_classes().size() == 6);
  CHECK(make_group(abelian_spec({2, 4})).conjugacy_classes().size() == 8);
  for (const auto& s : kRegistry) {
    auto g = make_group(GroupSpec::parse(s));
    std::multiset<std::uint64_t> mine;
    std::uint64_t total = 0;
    for (const auto& c : g.conjugacy_classes()) {
      mine.insert(c.size);
      total += c.size;
    }
    CHECK(total == g.order());
    CHECK(mine == naive_class_sizes(g));
    for (ElemId x = 0; x < g.size(); ++x) {
      CHECK(g.order_of(x) == g.conjugacy_classes()[g.class_of(x)].order);
    }
  }
}

TEST_CASE("group axioms on sampled triples, Lagrange") {
  std::mt19937_64 rng(7);
  for (const auto& s : kRegistry) {
    auto g = make_group(GroupSpec::parse(s));
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.size() - 1));
    for (int k = 0; k < 200; ++k) {
      const auto a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    }
    for (ElemId x = 0; x < g.size(); ++x) CHECK(g.order() % g.order_of(x) == 0);
  }
}

TEST_CASE("psl2 products do not depend on the stored sign") {
  const int p = 11;
  auto g = make_group(psl2_spec(p));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.size() - 1));
  auto neg = [&](const Element& e) {
    Element out = e;
    for (auto& v : out.code) v = static_cast<std::int32_t>(nt::mod(-v, p));
    return out;
  };
  auto raw = [&](const Element& a, const Element& b) {
    const auto& x = a.code;
    const auto& y = b.code;
    Element m{{static_cast<std::int32_t>((x[0] * y[0] + x[1] * y[2]) % p),
               static_cast<std::int32_t>((x[0] * y[1] + x[1] * y[3]) % p),
               static_cast<std::int32_t>((x[2] * y[0] + x[3] * y[2]) % p),
               static_cast<std::int32_t>((x[2] * y[1] + x[3] * y[3]) % p)}};
    return std::min(m, neg(m));
  };
  for (int k = 0; k < 300; ++k) {
    const auto a = g.element(pick(rng)), b = g.element(pick(rng));
    const auto expect = g.multiply(a, b);
    CHECK(raw(neg(a), b) == expect);
    CHECK(raw(a, neg(b)) == expect);
    CHECK(raw(neg(a), neg(b)) == expect);
  }
  CHECK_FALSE(g.contains(neg(el({1, 1, 0, 1}))));
}

TEST_CASE("automorphism groups") {
  auto ab = make_group(abelian_spec({5, 5}));
  CHECK(ab.aut_order() == 480);
  CHECK(ab.out_order() == 480);
  auto a5 = make_group(alternating_spec(5));
  CHECK(a5.out_order() == 2);
  // S5 conjugation fuses the two A5 classes of 5-cycles
  std::set<std::uint32_t> five_classes;
  for (const auto& c : a5.conjugacy_classes()) {
    if (c.order == 5) five_classes.insert(c.id);
  }
  CHECK(five_classes.size() == 2);
  bool fused = false;
  for (const auto& perm : a5.aut_permutations()) {
    for (const auto& c : a5.conjugacy_classes()) {
      if (c.order == 5 && a5.class_of(perm[c.representative]) != c.id) fused = true;
    }
  }
  CHECK(fused);
  CHECK(make_group(psl2_spec(7)).out_order() == 2);
  auto s5 = make_group(symmetric_spec(5));
  CHECK(naive_aut_count(s5) == 120);
  CHECK(s5.out_order() == 1);
  CHECK(naive_aut_count(a5) == 120);
  CHECK(naive_aut_count(make_group(psl2_spec(7))) == 336);
  CHECK(naive_aut_count(make_group(dihedral_spec(6))) == make_group(dihedral_spec(6)).aut_order());
  CHECK(naive_aut_count(make_group(abelian_spec({2, 4}))) == 8);
  CHECK(make_group(abelian_spec({2, 4})).aut_order() == 8);
  CHECK(make_group(abelian_spec({12})).aut_order() == 4);
  CHECK(make_group(dihedral_spec(7)).aut_order() == 42);

  try {
    make_group(alternating_spec(6)).aut_generators();
    FAIL("expected aut-unavailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::aut_unavailable);
  }
  CHECK_FALSE(make_group(abelian_spec({3, 3, 3})).aut_available());
}

TEST_CASE("automorphisms preserve products, orders and the class partition") {
  std::mt19937_64 rng(11);
  for (const auto& s : kRegistry) {
    auto g = make_group(GroupSpec::parse(s));
    if (!g.aut_available()) continue;
    CHECK(g.inn_order() * g.out_order() == g.aut_order());
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.size() - 1));
    for (const auto& f : g.aut_generators()) {
      for (int k = 0; k < 100; ++k) {
        const auto a = g.element(pick(rng)), b = g.element(pick(rng));
        CHECK(f(g.multiply(a, b)) == g.multiply(f(a), f(b)));
      }
    }
    for (const auto& perm : g.aut_permutations()) {
      std::set<ElemId> image(perm.begin(), perm.end());
      CHECK(image.size() == g.size());
      std::map<std::uint32_t, std::uint32_t> class_map;
      for (ElemId x = 0; x < g.size(); ++x) {
        CHECK(g.order_of(perm[x]) == g.order_of(x));
        auto [it, fresh] = class_map.emplace(g.class_of(x), g.class_of(perm[x]));
        CHECK(it->second == g.class_of(perm[x]));
      }
    }
  }
}
