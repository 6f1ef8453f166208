#pragma once

#include "hookchar/serialize.hpp"

#include <string>
#include <vector>

namespace hookchar {

enum class VerifyStatus { Pass, Fail, Reported };

struct VerifyReport {
  std::string suite;
  /// Instance parameters, e.g. {"n": 5, "k": 1}.
  Json params = Json::object();
  VerifyStatus status = VerifyStatus::Pass;
  /// Counterexample for a fail, comparison summary for a report.
  std::string witness;
  double wall_ms = 0.0;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Runs a suite (or "all") for every size up to max_n, clamped to the
/// suite's own bound. Throws DomainError for an unknown suite.
std::vector<VerifyReport> run_suite(const std::string& suite, int max_n);

bool any_failed(const std::vector<VerifyReport>& reports);

std::string render_text(const std::vector<VerifyReport>& reports, bool timing = false);
Json render_json(const std::vector<VerifyReport>& reports, bool timing = false);

std::string to_string(VerifyStatus s);

}  // namespace hookchar
