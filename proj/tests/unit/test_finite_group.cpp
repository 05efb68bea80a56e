#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "polywythoff/errors.hpp"
#include "polywythoff/finite_group.hpp"

using namespace polywythoff;

namespace {

std::vector<GroupElement> perms(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<GroupElement> out;
  for (auto c : cycles) out.emplace_back(parse_perm(c, degree));
  return out;
}

const auto kTomotope = [] {
  return perms(12, {"(5,10)(6,9)(7,12)(8,11)", "(1,6)(2,5)(3,8)(4,7)", "(5,9)(6,10)(7,11)(8,12)",
                    "(5,8)(6,7)(9,12)(10,11)"});
};

}  // namespace

TEST_CASE("closure orders") {
  CHECK(FiniteGroup::closure(kTomotope()).order() == 96);
  CHECK(FiniteGroup::closure(perms(7, {"(1,2)", "(2,3)(4,5)", "(2,4)(3,5)(6,7)"})).order() == 240);
  CHECK(FiniteGroup::closure(perms(3, {"(1,2)"})).order() == 2);
  auto s5 = perms(5, {"(1,2)", "(1,2,3,4,5)"});
  CHECK(FiniteGroup::closure(s5).order() == oracle::closure_order(s5));
}

TEST_CASE("closure is a group") {
  auto g = FiniteGroup::closure(kTomotope());
  CHECK(is_identity(g.identity()));
  for (ElementIndex i = 0; i < g.order(); i += 7) {
    CHECK(g.contains(inverse(g.element(i))));
    for (ElementIndex j = 0; j < g.order(); j += 13) CHECK(g.element(g.multiply(i, j)) == compose(g.element(i), g.element(j)));
    GroupElement w = g.identity();
    for (auto letter : g.word_for(i)) w = compose(w, g.generators()[letter]);
    CHECK(w == g.element(i));
  }
}

TEST_CASE("closure cap") {
  auto s6 = perms(6, {"(1,2)", "(1,2,3,4,5,6)"});
  CHECK_THROWS_AS(FiniteGroup::closure(s6, 100), CapExceeded);
  CHECK(FiniteGroup::closure(s6, 720).order() == 720);
  setenv("POLYWYTHOFF_CAP", "50", 1);
  CHECK(default_closure_cap() == 50);
  unsetenv("POLYWYTHOFF_CAP");
  CHECK(default_closure_cap() == 10'000'000);
}

TEST_CASE("subgroups") {
  auto g = FiniteGroup::closure(kTomotope());
  std::vector<GroupElement> p(g.generators().begin(), g.generators().begin() + 3);
  CHECK(subgroup(g, p).order() == 24);
  CHECK(FiniteGroup::generated_by(g.identity(), {}).order() == 1);
  std::vector<std::size_t> none;
  CHECK(subgroup_mask(g, none).order == 1);
  auto d = FiniteGroup::closure(perms(6, {"(1,2)(3,4)(5,6)", "(2,3)(4,5)(6,1)"}));
  std::vector<GroupElement> one{d.generators()[0]};
  CHECK(subgroup(d, one).order() == 2);
  CHECK_THROWS_AS(subgroup(d, perms(6, {"(1,2)"})), NotSubgroup);
}

TEST_CASE("right cosets") {
  auto g = FiniteGroup::closure(kTomotope());
  const auto& s = g.generators();
  CHECK(right_cosets(g, g).size() == 1);
  CHECK(right_cosets(g, FiniteGroup::closure(std::vector{s[1], s[2], s[3]})).size() == 4);
  CHECK(right_cosets(g, FiniteGroup::closure(std::vector{s[0], s[1]})).size() == 16);
  CHECK_THROWS_AS(right_cosets(g, FiniteGroup::closure(perms(12, {"(1,2)"}))), NotSubgroup);
}

TEST_CASE("coset partitions agree with brute force") {
  auto g = FiniteGroup::closure(kTomotope());
  for (std::vector<std::size_t> gens : {std::vector<std::size_t>{0}, {0, 1}, {1, 2, 3}, {0, 2}}) {
    auto mask = subgroup_mask(g, gens);
    CHECK(g.order() % mask.order == 0);
    std::vector<ElementIndex> hgens;
    for (auto i : gens) hgens.push_back(g.index_of(g.generators()[i]));
    auto part = right_coset_partition(g, mask, hgens);
    CHECK(part.count() == g.order() / mask.order);
    // Oracle: Hx as explicit sets.
    std::vector<ElementIndex> h;
    for (ElementIndex i = 0; i < g.order(); ++i)
      if (mask.contains(i)) h.push_back(i);
    std::set<std::set<ElementIndex>> cosets;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      std::set<ElementIndex> c;
      for (auto y : h) c.insert(g.multiply(y, x));
      cosets.insert(c);
      CHECK(part.coset_of[x] == part.coset_of[*c.begin()]);
    }
    CHECK(cosets.size() == part.count());
    for (std::uint32_t c = 0; c < part.count(); ++c) {
      auto rep = part.representative[c];
      CHECK(part.coset_of[rep] == c);
      for (ElementIndex x = 0; x < g.order(); ++x)
        if (part.coset_of[x] == c) CHECK(g.order_rank()[rep] <= g.order_rank()[x]);
    }
  }
}

TEST_CASE("intersections") {
  auto g = FiniteGroup::closure(kTomotope());
  const auto& s = g.generators();
  auto p = FiniteGroup::closure(std::vector{s[0], s[1], s[2]});
  auto q = FiniteGroup::closure(std::vector{s[0], s[1], s[3]});
  CHECK(intersect(p, q).order() == 6);
  CHECK(intersect(p, p).order() == 24);
  CHECK(intersect(FiniteGroup::closure(std::vector{s[0]}), FiniteGroup::closure(std::vector{s[1]})).order() == 1);
  auto a = intersect(p, q), b = intersect(q, p);
  for (const auto& e : a.elements()) CHECK(b.contains(e));
  CHECK_THROWS_AS(intersect(p, FiniteGroup::closure(perms(3, {"(1,2)"}))), KindMismatch);
}

TEST_CASE("element orders") {
  auto s = kTomotope();
  CHECK(element_order(identity_like(s[0])) == 1);
  CHECK(element_order(compose(s[2], s[3])) == 2);
  CHECK(element_order(compose(s[1], s[3])) == 4);
  CHECK(element_order(parse_perm("(1,2,3,4,5)", 5), 3) == std::nullopt);
}
