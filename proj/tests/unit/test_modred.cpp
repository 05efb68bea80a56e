#include <doctest.h>

#include "oracles.hpp"
#include "polywythoff/errors.hpp"
#include "polywythoff/modred.hpp"

using namespace polywythoff;

namespace {

const char* kStar = "tail=[3] triangle=(4,inf,2)";

IntegralReflectionSystem star_system() {
  return rescale(TailTriangleDiagram::parse_spec(kStar), parse_lengths("1,1,2,4"));
}

// Integer matrix product for dim x dim row-major matrices.
std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b, std::size_t d) {
  std::vector<long long> c(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
  return c;
}

}  // namespace

TEST_CASE("lengths") {
  auto l = parse_lengths("1, 1/2,3");
  REQUIRE(l.size() == 3);
  CHECK(l[1] == Rational(1, 2));
  CHECK(format_lengths(l) == "1,1/2,3");
  CHECK_THROWS_AS(parse_lengths("1,0"), ParseError);
  CHECK_THROWS_AS(parse_lengths("1,-2"), ParseError);
  CHECK_THROWS_AS(parse_lengths("1,x"), ParseError);
}

TEST_CASE("crystallographic diagrams") {
  auto yes = [](const char* spec) { return is_crystallographic(TailTriangleDiagram::parse_spec(spec)).yes; };
  CHECK(yes(kStar));
  CHECK(yes("tail=[3] triangle=(3,3,2)"));
  CHECK(yes("tail=[] triangle=(4,4,inf)"));
  CHECK(yes("tail=[] triangle=(3,3,3)"));
  CHECK_FALSE(yes("tail=[3] triangle=(4,inf,inf)"));
  CHECK_FALSE(yes("tail=[5] triangle=(3,3,2)"));
  CHECK_FALSE(yes("tail=[] triangle=(4,3,3)"));
  CHECK_FALSE(yes("tail=[] triangle=(6,3,4)"));
  CHECK_FALSE(is_crystallographic(TailTriangleDiagram::parse_spec("tail=[] triangle=(4,3,3)")).reason.empty());
  CHECK(four_cos_squared(Label(2)) == 0);
  CHECK(four_cos_squared(Label(3)) == 1);
  CHECK(four_cos_squared(Label(6)) == 3);
  CHECK(four_cos_squared(Label::infinity()) == 4);
}

TEST_CASE("structure constants") {
  auto sys = star_system();
  CHECK(sys.dim() == 4);
  const auto& l = sys.structure;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(l[i][i] == -2);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(l[i][j] >= (i == j ? -2 : 0));
      if (i != j) CHECK(l[i][j] * l[j][i] == four_cos_squared(sys.diagram.label(i, j)));
    }
  }
  auto all3 = rescale(TailTriangleDiagram::parse_spec("tail=[3] triangle=(3,3,2)"), parse_lengths("1,1,1,1"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK((all3.structure[i][j] == 0 || all3.structure[i][j] == 1));
}

TEST_CASE("integral generators") {
  auto sys = star_system();
  const std::size_t d = sys.dim();
  std::vector<long long> id(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  for (const auto& m : sys.generators) CHECK(mul(m, m, d) == id);
  CHECK(preserves_form(sys));
  CHECK(determinant(sys.gram) == Rational(-6));
  CHECK(determinant({{Rational(2), Rational(1)}, {Rational(1), Rational(1, 2)}}) == Rational(0));
  CHECK(determinant({}) == Rational(1));
}

TEST_CASE("rescale rejections") {
  try {
    rescale(TailTriangleDiagram::parse_spec(kStar), parse_lengths("1,1,1,1"));
    FAIL("expected a non-integral system");
  } catch (const NonIntegralSystem& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
  CHECK_THROWS_AS(rescale(TailTriangleDiagram::parse_spec("tail=[3] triangle=(4,inf,inf)"), parse_lengths("1,1,2,4")),
                  InvalidArgument);
  CHECK_THROWS_AS(rescale(TailTriangleDiagram::parse_spec(kStar), parse_lengths("1,1,2")), InvalidArgument);
}

TEST_CASE("reduction mod p") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  auto sys = star_system();
  CHECK_THROWS_AS(reduce_mod_p(sys, 4), InvalidArgument);
  auto s5 = reduce_mod_p(sys, 5);
  REQUIRE(s5.discriminant_mod_p);
  CHECK(*s5.discriminant_mod_p == 4);
  CHECK_FALSE(s5.singular());
  auto s3 = reduce_mod_p(sys, 3);
  CHECK(s3.singular());
  CHECK(s3.generators.size() == 4);
  for (const auto& m : s3.generators) CHECK((m * m).is_identity());
}

TEST_CASE("small primes") {
  auto sys = star_system();
  auto g2 = build_tail_triangle_modp(reduce_mod_p(sys, 2));
  CHECK(g2.order() == 96);
  CHECK(g2.diagram().to_spec() == "tail=[3] triangle=(4,4,2)");
  auto g3 = build_tail_triangle_modp(reduce_mod_p(sys, 3));
  CHECK(g3.order() == 1296);
  CHECK(g3.diagram().to_spec() == "tail=[3] triangle=(4,3,2)");
  std::vector<GroupElement> gens(g3.generators().begin(), g3.generators().end());
  CHECK(oracle::closure_order(gens) == 1296);

  // Translations: elements moving every vector by a multiple of the radical
  // vector of the reduced form. They should number 1296 / 48.
  auto spec = reduce_mod_p(sys, 3);
  REQUIRE(spec.gram_mod_p);
  const auto& B = *spec.gram_mod_p;
  std::vector<std::uint32_t> r;
  for (std::uint32_t code = 1; code < 81 && r.empty(); ++code) {
    std::vector<std::uint32_t> v{code % 3, code / 3 % 3, code / 9 % 3, code / 27};
    bool null = true;
    for (std::size_t i = 0; i < 4; ++i) {
      std::uint32_t s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += B[i][j] * v[j];
      null &= s % 3 == 0;
    }
    if (null) r = v;
  }
  REQUIRE(r.size() == 4);
  std::vector<GroupElement> kernel;
  for (const auto& e : g3.group().elements()) {
    const auto& m = std::get<MatModP>(e);
    bool translation = true;
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<std::uint32_t> col(4);
      for (std::size_t i = 0; i < 4; ++i) col[i] = (m.at(i, j) + 3 - (i == j ? 1 : 0)) % 3;
      bool multiple = false;
      for (std::uint32_t c = 0; c < 3 && !multiple; ++c) {
        bool eq = true;
        for (std::size_t i = 0; i < 4; ++i) eq &= col[i] == c * r[i] % 3;
        multiple = eq;
      }
      translation &= multiple;
    }
    if (translation) kernel.push_back(e);
  }
  CHECK(kernel.size() * 48 == 1296);
}

TEST_CASE("length search") {
  auto rows = search_lengths(TailTriangleDiagram::parse_spec(kStar), 2);
  std::size_t good = 0;
  for (const auto& r : rows) {
    CHECK(r.lengths.front() == Rational(1));
    if (r.c_group) {
      ++good;
      CHECK(format_lengths(r.lengths) == "1,1,2,4");
      CHECK(r.order == 96);
    }
  }
  CHECK(good == 1);
}

TEST_CASE("three ringings at p = 3") {
  auto base = build_tail_triangle_modp(reduce_mod_p(star_system(), 3));
  auto report = three_ringings(base);
  REQUIRE(report.builds.size() == 3);
  const auto& r2 = report.builds[1];
  CHECK(r2.polytope.poset.format_f_vector() == "(54, 162, 162, 27+27)");
  CHECK(r2.classification.kind == PolytopeClass::Regular);
  CHECK(r2.classification.schlafli == "{4,3,4}");
  CHECK(report.isomorphic[0][2]);
  CHECK(report.isomorphic[2][0]);
  CHECK_FALSE(report.isomorphic[0][1]);
  for (std::size_t i = 0; i < 3; ++i) CHECK(report.isomorphic[i][i]);
  auto kinds = report.builds[2].polytope.poset.kind_counts(3);
  CHECK(kinds["P"] == 27);
  CHECK(kinds["Q"] == 54);
}
