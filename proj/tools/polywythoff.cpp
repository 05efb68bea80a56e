// Command-line front end: fixtures in, verification reports and exports out.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "acceptance.hpp"
#include "polywythoff/amalgam.hpp"
#include "polywythoff/errors.hpp"
#include "polywythoff/fixture.hpp"
#include "polywythoff/fixtures.hpp"
#include "polywythoff/modred.hpp"
#include "polywythoff/report.hpp"
#include "polywythoff/wythoff.hpp"

namespace pw = polywythoff;

namespace {

/// A file on disk, or the name of a built-in fixture.
std::string fixture_text(const std::string& source) {
  if (std::filesystem::exists(source)) return pw::read_text_file(source);
  return std::string(pw::embedded_fixture(source).text);
}

pw::TailTriangleGroup load_group(const std::string& source) {
  auto f = pw::parse_tail_triangle_fixture(fixture_text(source));
  auto g = pw::verify_tail_triangle(f.alphas, f.beta);
  if (f.expect_order && *f.expect_order != g.order())
    throw pw::Error("closure order " + std::to_string(g.order()) + " differs from expected " +
                    std::to_string(*f.expect_order));
  return g;
}

struct ModredArgs {
  std::string diagram;
  std::string lengths = "1,1,2,4";
  std::uint32_t prime = 3;
  int ringing = 0;
  bool large = false;
};

void add_modred_options(CLI::App* cmd, ModredArgs& m, bool diagram_required) {
  auto* d = cmd->add_option("--diagram,--modred", m.diagram, "tail=[p1,...] triangle=(p,q,k); inf allowed");
  if (diagram_required) d->required();
  cmd->add_option("--lengths", m.lengths, "squared lengths of the rescaled roots")->capture_default_str();
  cmd->add_option("--prime", m.prime, "reduction prime")->capture_default_str();
  cmd->add_option("--ringing", m.ringing, "reading of an n = 3 star diagram (1, 2 or 3)")->check(CLI::Range(1, 3));
  cmd->add_flag("--large", m.large, "allow primes >= 5");
}

pw::ModPGroupSpec reduce(const ModredArgs& m) {
  if (m.prime >= 5 && !m.large) throw pw::InvalidArgument("primes >= 5 need --large");
  auto d = pw::TailTriangleDiagram::parse_spec(m.diagram);
  auto sys = pw::rescale(d, pw::parse_lengths(m.lengths));
  return pw::reduce_mod_p(sys, m.prime);
}

pw::TailTriangleGroup modred_group(const ModredArgs& m) {
  auto g = pw::build_tail_triangle_modp(reduce(m));
  return m.ringing > 1 ? pw::reorder_star(g, m.ringing) : g;
}

std::string describe_modred(const ModredArgs& m) {
  std::string s = "modred " + m.diagram + " lengths=" + m.lengths + " p=" + std::to_string(m.prime);
  if (m.ringing) s += " ringing=" + std::to_string(m.ringing);
  return s;
}

struct ReportArgs {
  bool key_values = false;
  bool no_timing = false;
  std::string hasse;
};

void add_report_options(CLI::App* cmd, ReportArgs& r) {
  cmd->add_flag("--kv", r.key_values, "key=value report");
  cmd->add_flag("--no-timing", r.no_timing, "omit timing lines");
  cmd->add_option("--hasse", r.hasse, "also write the Hasse diagram to this file");
}

void write_hasse_file(const std::string& path, const pw::FacePoset& p) {
  std::ofstream out(path);
  if (!out) throw pw::InvalidArgument("cannot write " + path);
  pw::write_hasse(out, p);
}

int emit(const pw::RunReport& report, const ReportArgs& args, const std::optional<pw::CosetPoset>& poly) {
  if (args.key_values) pw::write_key_values(std::cout, report, !args.no_timing);
  else pw::write_text(std::cout, report, !args.no_timing);
  if (!args.hasse.empty() && poly) write_hasse_file(args.hasse, poly->poset);
  return report.passed() ? pw::kExitOk : pw::kExitVerificationFailed;
}

int run_amalgam_ball(const std::string& p_source, const std::string& q_source, std::size_t radius,
                     const ReportArgs& args) {
  auto ctx = pw::AmalgamContext::build(pw::parse_string_fixture(fixture_text(p_source)).rhos,
                                       pw::parse_string_fixture(fixture_text(q_source)).rhos);
  auto ball = pw::enumerate_ball(ctx, radius);
  auto ridge = pw::base_ridge_section(ctx, ball);
  const bool regular = pw::universal_is_regular(ctx) == pw::UniversalClass::Regular;
  std::cout << "input:           amalgam " << p_source << " " << q_source << " radius " << radius << "\n"
            << "facet groups:    " << ctx.side_group(pw::Side::P).order() << ", "
            << ctx.side_group(pw::Side::Q).order() << " over " << ctx.shared_group().order() << "\n"
            << "ball elements:   " << ball.elements << "\n"
            << "ball faces:      " << ball.poset.format_f_vector() << "\n"
            << "ridge section:   " << ridge.ridges << " ridges, " << ridge.facets << " facets, "
            << (ridge.acyclic ? "open" : "closed") << ", " << (ridge.alternates ? "alternating" : "NOT alternating")
            << "\n"
            << "classification:  " << (regular ? "Regular" : "TwoOrbit") << "\n";
  if (!args.hasse.empty()) write_hasse_file(args.hasse, ball.poset);
  return ridge.acyclic && ridge.alternates && ridge.connected ? pw::kExitOk : pw::kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiregular polytopes from tail-triangle groups and amalgamated products"};
  app.require_subcommand(1);

  std::string fixture;
  ModredArgs modred;
  ReportArgs report;
  std::vector<std::string> amalgam_pair;
  std::size_t radius = 4;

  auto* build = app.add_subcommand("build", "verify, build and check a polytope");
  build->add_option("--fixture", fixture, "fixture file or built-in fixture name");
  add_modred_options(build, modred, false);
  build->add_option("--amalgam", amalgam_pair, "two string C-group fixtures P Q")->expected(2);
  build->add_option("--radius", radius, "ball radius for --amalgam")->capture_default_str();
  add_report_options(build, report);

  auto* verify = app.add_subcommand("verify", "check relations and the intersection condition");
  verify->add_option("--fixture", fixture, "fixture file or built-in fixture name")->required();

  auto* classify = app.add_subcommand("classify", "regular or two-orbit, with the automorphism group order");
  classify->add_option("--fixture", fixture, "fixture file or built-in fixture name");
  add_modred_options(classify, modred, false);

  auto* mod = app.add_subcommand("modred", "integral reflection system reduced mod p");
  add_modred_options(mod, modred, true);
  bool search = false;
  mod->add_flag("--search-lengths", search, "try squared-length ratios in {1,2,3,4,6}");
  add_report_options(mod, report);

  auto* amalgam = app.add_subcommand("amalgam", "normal forms and balls in the universal polytope");
  std::string p_source, q_source, word;
  std::optional<std::size_t> close_up;
  amalgam->add_option("--p", p_source, "string C-group fixture of the first facet")->required();
  amalgam->add_option("--q", q_source, "string C-group fixture of the second facet")->required();
  amalgam->add_option("--word", word, "letters a0 .. a<n-1> b to normalize");
  amalgam->add_option("--radius", radius, "ball radius")->capture_default_str();
  amalgam->add_option("--close-up", close_up, "not supported");
  add_report_options(amalgam, report);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  bool quick = false, large = false;
  std::string json_report;
  selftest->add_flag("--quick", quick, "skip primes >= 5 and large balls");
  selftest->add_flag("--large", large, "include the p = 5 and p = 7 rows");
  selftest->add_option("--json-report", json_report, "write machine-readable results here");

  auto* hasse = app.add_subcommand("export-hasse", "write the Hasse diagram of a built polytope");
  std::string out_path;
  hasse->add_option("--fixture", fixture, "fixture file or built-in fixture name");
  add_modred_options(hasse, modred, false);
  hasse->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? pw::kExitOk : pw::kExitInputError;
  }

  auto pick_group = [&]() -> std::pair<pw::TailTriangleGroup, std::string> {
    if (!fixture.empty() && !modred.diagram.empty())
      throw pw::InvalidArgument("give either --fixture or --diagram, not both");
    if (!fixture.empty()) return {load_group(fixture), fixture};
    if (!modred.diagram.empty()) return {modred_group(modred), describe_modred(modred)};
    throw pw::InvalidArgument("no input: give --fixture or --diagram");
  };

  try {
    if (*build) {
      if (!amalgam_pair.empty()) return run_amalgam_ball(amalgam_pair[0], amalgam_pair[1], radius, report);
      auto [g, name] = pick_group();
      std::optional<pw::CosetPoset> poly;
      auto r = pw::run_pipeline(g, name, {}, &poly);
      return emit(r, report, poly);
    }

    if (*verify) {
      auto g = load_group(fixture);
      auto reduced = pw::check_intersection_reduced(g);
      auto full = pw::check_intersection_full(g);
      std::cout << "input:        " << fixture << "\n"
                << "group order:  " << g.order() << "\n"
                << "diagram:      " << (g.n() >= 2 ? g.diagram().to_spec() : "k=" + g.diagram().k.to_string())
                << "\n"
                << "reduced:      " << (reduced.passed ? "pass" : "fail") << " (" << reduced.conditions_checked
                << " conditions)\n"
                << "full:         " << (full.passed ? "pass" : "fail") << " (" << full.conditions_checked
                << " conditions)\n";
      if (!reduced.passed) std::cout << "witness:      " << reduced.detail << "\n";
      if (reduced.passed != full.passed) {
        std::cout << "reduced and full checks disagree\n";
        return pw::kExitVerificationFailed;
      }
      return reduced.passed ? pw::kExitOk : pw::kExitVerificationFailed;
    }

    if (*classify) {
      auto [g, name] = pick_group();
      auto red = pw::check_intersection_reduced(g);
      if (!red.passed) throw pw::NotCGroup(red.detail);
      auto cls = pw::classify(g);
      std::cout << "input:           " << name << "\n"
                << "classification:  " << pw::to_string(cls.kind) << "\n"
                << "Aut order:       " << cls.aut_order << "\n";
      if (!cls.schlafli.empty()) std::cout << "type:            " << cls.schlafli << "\n";
      return pw::kExitOk;
    }

    if (*mod) {
      auto d = pw::TailTriangleDiagram::parse_spec(modred.diagram);
      auto verdict = pw::is_crystallographic(d);
      std::cout << "diagram:         " << d.to_spec() << "\n"
                << "crystallographic: " << (verdict.yes ? "yes" : "no, " + verdict.reason) << "\n";
      if (!verdict.yes) return pw::kExitInputError;
      if (search) {
        if (modred.prime >= 5 && !modred.large) throw pw::InvalidArgument("primes >= 5 need --large");
        std::cout << "integral systems mod " << modred.prime << ":\n";
        for (const auto& row : pw::search_lengths(d, modred.prime))
          std::cout << "  lengths " << std::left << std::setw(14) << pw::format_lengths(row.lengths) << " order "
                    << std::setw(8) << row.order << " " << row.detail << "\n";
        return pw::kExitOk;
      }
      auto spec = reduce(modred);
      auto sys = pw::rescale(d, pw::parse_lengths(modred.lengths));
      std::cout << "structure constants:\n";
      for (const auto& row : sys.structure) {
        std::cout << "  ";
        for (auto v : row) std::cout << std::setw(4) << v;
        std::cout << "\n";
      }
      std::cout << "discriminant:    " << polywythoff::format_lengths({spec.discriminant}) << " over Q, ";
      if (spec.discriminant_mod_p) std::cout << *spec.discriminant_mod_p << (spec.singular() ? " (singular)" : "");
      else std::cout << "undefined";
      std::cout << " mod " << spec.p << "\n";
      auto g = pw::build_tail_triangle_modp(spec);
      std::cout << "group order:     " << g.order() << "\n"
                << "measured:        " << g.diagram().to_spec() << "\n";
      if (!modred.ringing) return pw::kExitOk;
      auto ringed = modred.ringing > 1 ? pw::reorder_star(g, modred.ringing) : g;
      std::optional<pw::CosetPoset> poly;
      auto r = pw::run_pipeline(ringed, describe_modred(modred), {}, &poly);
      return emit(r, report, poly);
    }

    if (*amalgam) {
      if (close_up) throw pw::InvalidArgument("--close-up is not supported: finite quotients of the universal polytope are out of scope");
      if (word.empty()) return run_amalgam_ball(p_source, q_source, radius, report);
      auto ctx = pw::AmalgamContext::build(pw::parse_string_fixture(fixture_text(p_source)).rhos,
                                           pw::parse_string_fixture(fixture_text(q_source)).rhos);
      auto w = ctx.normalize(ctx.parse_letters(word));
      std::cout << "normal form:     " << ctx.to_string(w) << "\n"
                << "length:          " << w.length() << "\n"
                << "word:            " << ctx.format_letters(ctx.to_letters(w)) << "\n";
      return pw::kExitOk;
    }

    if (*selftest) {
      auto results = pw::acceptance::run_all({quick, large});
      pw::acceptance::print_table(std::cout, results);
      if (!json_report.empty()) {
        std::ofstream out(json_report);
        if (!out) throw pw::InvalidArgument("cannot write " + json_report);
        out << pw::acceptance::to_json(results).dump(2) << "\n";
      }
      return pw::acceptance::all_passed(results) ? pw::kExitOk : pw::kExitVerificationFailed;
    }

    if (*hasse) {
      auto [g, name] = pick_group();
      auto poly = pw::build_polytope(g);
      if (out_path.empty()) pw::write_hasse(std::cout, poly.poset);
      else write_hasse_file(out_path, poly.poset);
      return pw::kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pw::exit_code_for(e);
  }
  return pw::kExitOk;
}
