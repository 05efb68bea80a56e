#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polywythoff/ttgroup.hpp"
#include "polywythoff/wythoff.hpp"

namespace polywythoff {

/// Process exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

struct PhaseTiming {
  std::string phase;
  double seconds = 0;
};

/// Outcome of the build pipeline for one tail-triangle group.
struct RunReport {
  std::string input;
  std::size_t order = 0;
  std::string diagram;  // measured labels
  bool reduced_passed = false;
  bool reduced_precondition_failed = false;
  std::optional<bool> full_passed;  // empty when the full check was skipped
  std::string intersection_detail;
  std::string f_vector;
  std::size_t flags = 0;
  std::size_t flag_orbits = 0;
  bool axiom_a = false, axiom_b = false, axiom_c = false;
  std::string classification;
  std::size_t aut_order = 0;
  std::string schlafli;
  std::map<std::size_t, std::size_t> section_sizes;
  bool sections_alternate = false;
  std::vector<std::string> failures;
  std::vector<PhaseTiming> timings;

  bool built() const { return !f_vector.empty(); }
  bool intersection_agrees() const { return !full_passed || *full_passed == reduced_passed; }
  bool passed() const { return failures.empty(); }
};

struct PipelineOptions {
  /// Run the subset-pair intersection check when n + 1 is at most this.
  std::size_t full_check_max_generators = 6;
  bool check_axioms = true;
};

/// verify -> build -> axioms A/B/C -> co-rank-2 sections -> classify.
/// Verification failures are recorded in the report; the polytope is
/// returned through `polytope` when it was built.
RunReport run_pipeline(const TailTriangleGroup& g, std::string input, const PipelineOptions& options = {},
                       std::optional<CosetPoset>* polytope = nullptr);

/// Plain-text report; timing lines only when requested.
void write_text(std::ostream& out, const RunReport& r, bool timings = true);
/// One `key=value` line per field.
void write_key_values(std::ostream& out, const RunReport& r, bool timings = true);

/// Measures elapsed wall time of a phase into a report.
class PhaseTimer {
 public:
  PhaseTimer(std::vector<PhaseTiming>& sink, std::string phase)
      : sink_(sink), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    sink_.push_back({phase_, std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()});
  }
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  std::vector<PhaseTiming>& sink_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace polywythoff
