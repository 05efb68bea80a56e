#include <doctest.h>

#include <sstream>

#include "polywythoff/errors.hpp"
#include "polywythoff/fixture.hpp"
#include "polywythoff/fixtures.hpp"
#include "polywythoff/report.hpp"

using namespace polywythoff;

namespace {

TailTriangleGroup load(std::string_view name) {
  auto f = parse_tail_triangle_fixture(embedded_fixture(name).text);
  return verify_tail_triangle(f.alphas, f.beta);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ParseError("x")) == kExitInputError);
  CHECK(exit_code_for(InvalidArgument("x")) == kExitInputError);
  CHECK(exit_code_for(NotCGroup("x")) == kExitVerificationFailed);
  CHECK(exit_code_for(CommutationViolation(0, 2)) == kExitVerificationFailed);
}

TEST_CASE("pipeline on the tomotope") {
  std::optional<CosetPoset> poly;
  auto r = run_pipeline(load("tomotope"), "tomotope", {}, &poly);
  CHECK(r.passed());
  CHECK(r.built());
  CHECK(r.intersection_agrees());
  CHECK(r.order == 96);
  CHECK(r.f_vector == "(4, 12, 16, 4+4)");
  CHECK(r.flags == 192);
  CHECK(r.flag_orbits == 2);
  CHECK((r.axiom_a && r.axiom_b && r.axiom_c));
  CHECK(r.classification == "TwoOrbit");
  CHECK(r.aut_order == 96);
  CHECK(r.sections_alternate);
  REQUIRE(poly);
  CHECK(poly->poset.format_f_vector() == r.f_vector);

  std::ostringstream text, kv;
  write_text(text, r, false);
  write_key_values(kv, r, false);
  CHECK(text.str().find("f-vector:        (4, 12, 16, 4+4)") != std::string::npos);
  CHECK(text.str().find("classification:  TwoOrbit, Aut order 96") != std::string::npos);
  CHECK(kv.str().find("order=96\n") != std::string::npos);
  CHECK(kv.str().find("seconds") == std::string::npos);
}

TEST_CASE("pipeline records failures") {
  auto r = run_pipeline(load("not_c_group"), "not_c_group");
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.reduced_passed);
  CHECK_FALSE(r.built());
  REQUIRE(r.full_passed);
  CHECK_FALSE(*r.full_passed);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("full check is skipped for many generators") {
  PipelineOptions opts;
  opts.full_check_max_generators = 3;
  auto r = run_pipeline(load("tomotope"), "tomotope", opts);
  CHECK_FALSE(r.full_passed);
  CHECK(r.passed());
}

TEST_CASE("phase timer") {
  std::vector<PhaseTiming> sink;
  { PhaseTimer t(sink, "phase"); }
  REQUIRE(sink.size() == 1);
  CHECK(sink[0].phase == "phase");
  CHECK(sink[0].seconds >= 0);
}
