#include <doctest.h>

#include <algorithm>

#include "sepmon/groups/cosets.hpp"

using namespace sepmon::groups;

namespace {

GroupPtr s3() { return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}); }

Element find(const GroupPtr& g, const Permutation& p) { return *g->find(p); }

}  // namespace

TEST_CASE("groups from permutations") {
  auto g = s3();
  CHECK(g->order() == 6);
  CHECK(g->label(0) == "()");
  CHECK(g->label(1) == "(1 2)");
  CHECK(FiniteGroup::from_permutations({})->order() == 1);
  CHECK(FiniteGroup::from_permutations({{1, 2, 3, 0}})->order() == 4);
  CHECK(FiniteGroup::from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}})->order() == 24);
}

TEST_CASE("breadth-first order and composition convention") {
  auto g = s3();
  // (a*b)(i) = a(b(i)); the queue element x spawns x*s.
  CHECK(g->permutation(2) == Permutation{1, 2, 0});
  for (Element a = 0; a < g->order(); ++a) {
    for (Element b = 0; b < g->order(); ++b) {
      CHECK(g->permutation(g->mul(a, b)) == compose(g->permutation(a), g->permutation(b)));
    }
  }
}

TEST_CASE("invalid permutation input") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 0}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}, 100), GroupError);
}

TEST_CASE("Cayley tables") {
  auto c2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(c2->order() == 2);
  CHECK(c2->inv(1) == 1);
  auto v4 = FiniteGroup::from_cayley_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"e", "a", "b", "c"});
  CHECK(v4->order() == 4);
  CHECK(v4->label(3) == "c");
  try {
    FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
    FAIL("expected an error");
  } catch (const GroupError& e) {
    CHECK_FALSE(e.violations().empty());
  }
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}), GroupError);
}

TEST_CASE("non-associative Latin square is rejected with a witness triple") {
  // A Latin square with identity 0 that is not associative.
  std::vector<std::vector<Element>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  auto v = FiniteGroup::axiom_violations(t);
  CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("associativity") != std::string::npos; }));
}

TEST_CASE("generated subgroups") {
  auto g = s3();
  CHECK(subgroup_generated(g, {}).order() == 1);
  CHECK(subgroup_generated(g, {find(g, {1, 2, 0})}).order() == 3);
  std::vector<Element> all(g->order());
  for (Element e = 0; e < g->order(); ++e) all[e] = e;
  CHECK(subgroup_generated(g, all).is_whole_group());
  auto h = subgroup_generated(g, {1});
  CHECK(h.as_group()->order() == 2);
  CHECK(h.to_parent(h.to_local(1)) == 1);
  CHECK_THROWS_AS(h.to_local(2), std::out_of_range);
}

TEST_CASE("right cosets") {
  auto g = s3();
  CHECK(CosetSpace::right_cosets(g, subgroup_generated(g, {find(g, {1, 2, 0})})).index() == 2);
  auto cs = CosetSpace::right_cosets(g, subgroup_generated(g, {1}));
  CHECK(cs.index() == 3);
  CHECK(cs.representatives().front() == 0);
  CHECK(cs.coset_label(0) == "H");
  auto whole = CosetSpace::right_cosets(g, subgroup_generated(g, g->generators()));
  CHECK(whole.index() == 1);
  CHECK(whole.representatives() == std::vector<Element>{0});
}

TEST_CASE("factorization over every preset-sized group") {
  for (const auto& gens : std::vector<std::vector<Permutation>>{
           {{1, 0, 2}, {1, 2, 0}}, {{1, 2, 3, 0}, {0, 3, 2, 1}}, {{1, 2, 0, 3}, {1, 0, 3, 2}}, {{1, 2, 3, 0}, {1, 0, 2, 3}}}) {
    auto g = FiniteGroup::from_permutations(gens);
    for (Element x = 0; x < g->order(); ++x) {
      auto cs = CosetSpace::right_cosets(g, subgroup_generated(g, {x}));
      CHECK(cs.index() * cs.subgroup().order() == g->order());
      std::vector<int> seen(g->order(), 0);
      for (const auto& c : cs.cosets()) {
        for (auto y : c) ++seen[y];
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
      CHECK(cs.factorize(0).h == 0);
      CHECK(cs.factorize(0).r == 0);
      for (Element y = 0; y < g->order(); ++y) {
        auto f = cs.factorize(y);
        CHECK(g->mul(f.h, f.r) == y);
        CHECK(cs.subgroup().contains(f.h));
        CHECK(f.r == cs.representatives()[cs.coset_of(y)]);
        if (cs.subgroup().contains(y)) CHECK(f.r == 0);
      }
    }
  }
}
