#pragma once

// Structured reports behind the CLI subcommands. Every report is a JSON
// document {config, results, summary} with unbounded integers rendered as
// decimal strings; csv and table renderings are derived from the same rows.

#include "qgenus/order.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qgenus::reports {

using nlohmann::ordered_json;

ordered_json order_info_report(const QuadraticOrder &order);

ordered_json classgroup_report(const QuadraticOrder &order);

struct VerifyOptions {
  long n_max = 200;
  std::vector<double> s_values{2.0};
};

// Per-character three-engine coefficient agreement, numerical evaluations,
// and the order-level genus identities. summary.status is "pass" or "fail".
ordered_json verify_report(const QuadraticOrder &order, const VerifyOptions &opts);

struct SweepOptions {
  Int d_min, d_max;
  bool lseries = false; // also run the three engines per character
  long n_max = 100;     // coefficient range for the lseries check
  int jobs = 1;
};

// Every valid discriminant in [d_min, d_max]: genus numbers by formula vs by
// group quotient, optionally the engine agreement; deterministic row order.
ordered_json sweep_report(const SweepOptions &opts);

struct TypenumbersOptions {
  long search_bound = 10000;
};

ordered_json typenumbers_report(const QuadraticOrder &order, const TypenumbersOptions &opts);

std::string to_csv(const ordered_json &report);
std::string to_table(const ordered_json &report);

// False exactly when summary.status exists and is not "pass".
bool report_passed(const ordered_json &report);

} // namespace qgenus::reports
