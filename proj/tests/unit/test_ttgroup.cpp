#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polywythoff/errors.hpp"
#include "polywythoff/fixture.hpp"
#include "polywythoff/fixtures.hpp"
#include "polywythoff/modred.hpp"
#include "polywythoff/ttgroup.hpp"

using namespace polywythoff;

namespace {

TailTriangleGroup load(std::string_view name) {
  auto f = parse_tail_triangle_fixture(embedded_fixture(name).text);
  return verify_tail_triangle(f.alphas, f.beta);
}

const char* kCGroupFixtures[] = {"tomotope", "66_240a", "b3_digon", "d4", "star_mod2", "star_mod3"};

}  // namespace

TEST_CASE("labels") {
  CHECK(Label::parse("inf").is_infinite());
  CHECK(Label::parse(" 4 ").value() == 4);
  CHECK(Label::infinity().to_string() == "inf");
  CHECK_THROWS_AS(Label::parse("0"), ParseError);
  CHECK_THROWS_AS(Label::parse("x"), ParseError);
}

TEST_CASE("diagram specs") {
  auto d = TailTriangleDiagram::parse_spec("tail=[3] triangle=(4,inf,2)");
  CHECK(d.n == 3);
  CHECK(d.label(0, 1) == Label(3));
  CHECK(d.label(1, 2) == Label(4));
  CHECK(d.label(1, 3) == Label::infinity());
  CHECK(d.label(2, 3) == Label(2));
  CHECK(d.label(0, 2) == Label(2));
  CHECK(d.must_commute(0, 3));
  CHECK_FALSE(d.must_commute(1, 3));
  CHECK(TailTriangleDiagram::parse_spec(d.to_spec()) == d);
  CHECK(TailTriangleDiagram::parse_spec("tail=[] triangle=(6,6,2)").n == 2);
  CHECK_THROWS_AS(TailTriangleDiagram::parse_spec("tail=[3 triangle=(4,4,2)"), ParseError);
  TailTriangleDiagram bad = d;
  bad.tail.clear();
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = d;
  bad.p = Label(1);
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("measured labels of the tomotope") {
  auto g = load("tomotope");
  CHECK(g.order() == 96);
  CHECK(g.diagram().to_spec() == "tail=[3] triangle=(3,4,2)");
  CHECK(g.generated(g.facet_p()).order == 24);
  CHECK(g.generated(g.facet_q()).order == 24);
  CHECK(g.generated(g.gamma(2)).order == 6);
  CHECK(g.generated(g.gamma(0)).order == 24);
  CHECK(g.members(g.gamma(1)) == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("relation failures") {
  Perm t = parse_perm("(1,2)", 4), four = parse_perm("(1,2,3,4)", 4);
  CHECK_THROWS_AS(verify_tail_triangle({t}, four), NotInvolution);
  CHECK_THROWS_AS(verify_tail_triangle({Perm::identity(4)}, t), NotInvolution);
  try {
    load("bad_relation");
    FAIL("expected a commutation violation");
  } catch (const CommutationViolation& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("degenerate n = 1 diagram") {
  auto g = verify_tail_triangle({parse_perm("(1,2)(3,4)(5,6)", 6)}, parse_perm("(2,3)(4,5)(6,1)", 6));
  CHECK(g.n() == 1);
  CHECK(g.diagram().k == Label(3));
  CHECK(check_intersection_reduced(g).passed);
  CHECK(check_intersection_full(g).passed);
}

TEST_CASE("intersection checks agree on fixtures") {
  for (auto name : kCGroupFixtures) {
    CAPTURE(name);
    auto g = load(name);
    auto full = check_intersection_full(g);
    auto reduced = check_intersection_reduced(g);
    CHECK(full.passed);
    CHECK(reduced.passed);
    CHECK(reduced.conditions_checked <= full.conditions_checked);
    if (g.n() == 3) CHECK(check_intersection_n3_shortcut(g).passed);
    CHECK(distinguished_subgroups_distinct(g));
    // Facet subgroups meet in the ridge subgroup.
    auto both = g.generated(g.facet_p()).members & g.generated(g.facet_q()).members;
    CHECK(both == g.generated(g.gamma(g.n() - 1)).members);
  }
}

TEST_CASE("a group failing the intersection condition") {
  auto g = load("not_c_group");
  auto full = check_intersection_full(g);
  auto reduced = check_intersection_reduced(g);
  CHECK_FALSE(full.passed);
  CHECK_FALSE(reduced.passed);
  REQUIRE(reduced.witness);
  CHECK_FALSE(is_identity(reduced.witness->element));
  CHECK_FALSE(reduced.detail.empty());
  CHECK_FALSE(distinguished_subgroups_distinct(g));
}

TEST_CASE("string C-groups") {
  auto g = load("tomotope");
  std::vector<std::size_t> p{0, 1, 2};
  CHECK(is_string_c_group(g, p).passed);
  std::vector<GroupElement> gens(g.generators().begin(), g.generators().begin() + 3);
  CHECK(format_schlafli(schlafli_type(gens)) == "{3,3}");
  std::vector<GroupElement> one{g.generators()[0]};
  CHECK(is_string_c_group(one).passed);
  CHECK(schlafli_type(one).empty());
  std::vector<GroupElement> s3{parse_perm("(1,2)", 3), parse_perm("(2,3)", 3), parse_perm("(1,3)", 3)};
  CHECK_FALSE(is_string_c_group(s3).passed);

  auto g2 = load("star_mod2");
  std::vector<GroupElement> facet(g2.generators().begin(), g2.generators().begin() + 3);
  CHECK(format_schlafli(schlafli_type(facet)) == "{3,4}");
}

TEST_CASE("diagram recovery from integral reflections") {
  for (const char* spec : {"tail=[3] triangle=(3,3,2)", "tail=[] triangle=(4,2,3)", "tail=[] triangle=(3,3,3)"}) {
    CAPTURE(spec);
    auto d = TailTriangleDiagram::parse_spec(spec);
    // Any integral lengths will do; pick the first one the search finds.
    std::vector<Rational> lengths;
    for (const auto& row : search_lengths(d, 7))
      if (row.c_group) {
        lengths = row.lengths;
        break;
      }
    REQUIRE_FALSE(lengths.empty());
    auto g = build_tail_triangle_modp(reduce_mod_p(rescale(d, lengths), 7));
    CHECK(g.diagram() == d);
  }
}

TEST_CASE("automorphism extension") {
  auto swap_last = [](const TailTriangleGroup& g) {
    auto gens = g.generators();
    std::swap(gens[g.n() - 1], gens[g.n()]);
    return gens;
  };
  auto tomotope = load("tomotope");
  CHECK_FALSE(extends_to_homomorphism(tomotope.group(), swap_last(tomotope)));
  auto d4 = load("d4");
  std::size_t image = 0;
  CHECK(extends_to_homomorphism(d4.group(), swap_last(d4), &image));
  CHECK(image == 192);
  auto images = homomorphism_images(d4.group(), swap_last(d4));
  REQUIRE(images);
  CHECK(images->size() == 192);
}

TEST_CASE("star diagram ringings") {
  auto g = load("star_mod3");
  CHECK(reorder_star(g, 2).diagram().to_spec() == "tail=[4] triangle=(3,3,2)");
  CHECK(reorder_star(g, 3).diagram().to_spec() == "tail=[3] triangle=(4,3,2)");
  CHECK_THROWS_AS(reorder_star(g, 4), InvalidArgument);
  CHECK_THROWS_AS(reorder_star(load("66_240a"), 2), InvalidArgument);
}

TEST_CASE("n = 3 shortcut agrees with the full check on random groups") {
  std::mt19937 rng(19);
  auto involution = [&](std::uint32_t degree) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<std::uint32_t> pts = img;
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t swaps = 1 + rng() % (degree / 2);
    for (std::size_t i = 0; i < swaps; ++i) std::swap(img[pts[2 * i]], img[pts[2 * i + 1]]);
    return Perm(img);
  };
  std::size_t tested = 0, c_groups = 0;
  while (tested < 60) {
    const auto degree = static_cast<std::uint32_t>(5 + rng() % 3);
    std::vector<Perm> gens{involution(degree), involution(degree)};
    while (gens.size() < 4) {
      Perm c = involution(degree);
      if (gens[0] * c == c * gens[0]) gens.push_back(c);
    }
    std::vector<GroupElement> alphas(gens.begin(), gens.end() - 1);
    auto g = verify_tail_triangle(alphas, gens.back());
    bool full = check_intersection_full(g).passed;
    CHECK(check_intersection_n3_shortcut(g).passed == full);
    CHECK(check_intersection_reduced(g).passed == full);
    c_groups += full;
    ++tested;
  }
  CHECK(c_groups > 0);
  CHECK(c_groups < tested);
}
