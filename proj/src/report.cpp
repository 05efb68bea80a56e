#include "polywythoff/report.hpp"

#include <iomanip>

#include "polywythoff/errors.hpp"

namespace polywythoff {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
      dynamic_cast<const KindMismatch*>(&e))
    return kExitInputError;
  if (dynamic_cast<const Error*>(&e)) return kExitVerificationFailed;
  return kExitInputError;
}

RunReport run_pipeline(const TailTriangleGroup& g, std::string input, const PipelineOptions& options,
                       std::optional<CosetPoset>* polytope) {
  RunReport r;
  r.input = std::move(input);
  r.order = g.order();
  r.diagram = g.n() >= 2 ? g.diagram().to_spec() : "k=" + g.diagram().k.to_string();

  {
    PhaseTimer t(r.timings, "intersection");
    auto reduced = check_intersection_reduced(g);
    r.reduced_passed = reduced.passed;
    r.reduced_precondition_failed = reduced.precondition_failed;
    r.intersection_detail = reduced.detail;
    if (g.n() + 1 <= options.full_check_max_generators) {
      auto full = check_intersection_full(g);
      r.full_passed = full.passed;
      if (!full.passed && r.intersection_detail.empty()) r.intersection_detail = full.detail;
    }
  }
  if (!r.intersection_agrees()) r.failures.push_back("reduced and full intersection checks disagree");
  if (!r.reduced_passed) {
    r.failures.push_back("NotCGroup: " + r.intersection_detail);
    return r;
  }

  CosetPoset poly = [&] {
    PhaseTimer t(r.timings, "build");
    return build_polytope_unchecked(g);
  }();
  r.f_vector = poly.poset.format_f_vector();

  if (options.check_axioms) {
    PhaseTimer t(r.timings, "axioms");
    auto a = verify_ranked(poly.poset);
    auto b = verify_diamond(poly.poset);
    auto c = verify_strong_connectivity(poly.poset);
    r.axiom_a = a.passed;
    r.axiom_b = b.passed;
    r.axiom_c = c.passed;
    for (const auto* res : {&a, &b, &c})
      if (!res->passed) r.failures.push_back(res->detail);
  }

  {
    PhaseTimer t(r.timings, "flags");
    auto orbits = flag_orbits(poly, g.group());
    r.flags = orbits.flags;
    r.flag_orbits = orbits.orbits;
    if (r.flags != 2 * r.order)
      r.failures.push_back("flag count " + std::to_string(r.flags) + " != 2 x group order");
  }

  {
    PhaseTimer t(r.timings, "sections");
    auto sections = two_sections(poly.poset);
    r.section_sizes = section_histogram(sections);
    r.sections_alternate = std::all_of(sections.begin(), sections.end(),
                                       [](const PolygonSection& s) { return s.is_single_cycle && s.alternates; });
    if (!r.sections_alternate) r.failures.push_back("a co-rank-2 section does not alternate between facet kinds");
  }

  {
    PhaseTimer t(r.timings, "classify");
    auto cls = classify(g);
    r.classification = to_string(cls.kind);
    r.aut_order = cls.aut_order;
    r.schlafli = cls.schlafli;
  }

  if (polytope) *polytope = std::move(poly);
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string histogram_text(const std::map<std::size_t, std::size_t>& h) {
  std::string out;
  for (const auto& [size, count] : h) {
    if (!out.empty()) out += " ";
    out += std::to_string(count) + "x" + std::to_string(size) + "-gon";
  }
  return out.empty() ? "-" : out;
}

std::string full_text(const RunReport& r) {
  return r.full_passed ? (*r.full_passed ? "pass" : "fail") : "skipped";
}

}  // namespace

void write_text(std::ostream& out, const RunReport& r, bool timings) {
  out << "input:           " << r.input << "\n"
      << "group order:     " << r.order << "\n"
      << "diagram:         " << r.diagram << "\n"
      << "intersection:    reduced " << (r.reduced_passed ? "pass" : "fail") << ", full " << full_text(r)
      << (r.intersection_agrees() ? "" : " (DISAGREE)") << "\n";
  if (!r.intersection_detail.empty()) out << "  witness:       " << r.intersection_detail << "\n";
  if (r.built()) {
    out << "f-vector:        " << r.f_vector << "\n"
        << "axioms:          A " << yes_no(r.axiom_a) << ", B " << yes_no(r.axiom_b) << ", C " << yes_no(r.axiom_c)
        << "\n"
        << "flags:           " << r.flags << " in " << r.flag_orbits << " orbits\n"
        << "2-sections:      " << histogram_text(r.section_sizes)
        << (r.sections_alternate ? ", alternating" : ", NOT alternating") << "\n"
        << "classification:  " << r.classification << ", Aut order " << r.aut_order;
    if (!r.schlafli.empty()) out << ", type " << r.schlafli;
    out << "\n";
  }
  if (timings)
    for (const auto& t : r.timings)
      out << "time " << std::left << std::setw(12) << t.phase << std::fixed << std::setprecision(3) << t.seconds
          << "s\n";
  for (const auto& f : r.failures) out << "FAILED: " << f << "\n";
  out << "result:          " << (r.passed() ? "ok" : "verification failed") << "\n";
}

void write_key_values(std::ostream& out, const RunReport& r, bool timings) {
  out << "input=" << r.input << "\n"
      << "order=" << r.order << "\n"
      << "diagram=" << r.diagram << "\n"
      << "reduced_check=" << (r.reduced_passed ? "pass" : "fail") << "\n"
      << "full_check=" << full_text(r) << "\n"
      << "checks_agree=" << yes_no(r.intersection_agrees()) << "\n";
  if (r.built()) {
    out << "f_vector=" << r.f_vector << "\n"
        << "axiom_a=" << yes_no(r.axiom_a) << "\n"
        << "axiom_b=" << yes_no(r.axiom_b) << "\n"
        << "axiom_c=" << yes_no(r.axiom_c) << "\n"
        << "flags=" << r.flags << "\n"
        << "flag_orbits=" << r.flag_orbits << "\n"
        << "sections=" << histogram_text(r.section_sizes) << "\n"
        << "sections_alternate=" << yes_no(r.sections_alternate) << "\n"
        << "classification=" << r.classification << "\n"
        << "aut_order=" << r.aut_order << "\n"
        << "schlafli=" << (r.schlafli.empty() ? "-" : r.schlafli) << "\n";
  }
  if (timings)
    for (const auto& t : r.timings) out << "time." << t.phase << "=" << std::fixed << std::setprecision(3) << t.seconds << "\n";
  out << "passed=" << yes_no(r.passed()) << "\n";
}

}  // namespace polywythoff
