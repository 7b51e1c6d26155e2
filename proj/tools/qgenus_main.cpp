// qgenus: genus theory of quadratic orders from the command line. Subcommands
// report order invariants, class group structure, the three-engine L-series
// verification, discriminant sweeps, and maximal-order type numbers.
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage/bad input.

#include "qgenus/order.hpp"
#include "qgenus/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using qgenus::Int;
using qgenus::QuadraticOrder;
using qgenus::reports::ordered_json;

struct OutputOpts {
  std::string format = "table";
  std::string out;
};

struct OrderOpts {
  std::string disc;
  std::string dk;
  std::string f = "1";
};

void add_output_opts(CLI::App *sub, OutputOpts &o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
}

void add_order_opts(CLI::App *sub, OrderOpts &o) {
  sub->add_option("--disc", o.disc, "Order discriminant D = f^2 d_K");
  sub->add_option("--dk", o.dk, "Fundamental discriminant d_K");
  sub->add_option("--f", o.f, "Conductor (with --dk; default 1)")->capture_default_str();
}

QuadraticOrder resolve_order(const OrderOpts &o) {
  if (!o.disc.empty() && !o.dk.empty())
    throw std::invalid_argument("give either --disc or --dk, not both");
  if (!o.disc.empty()) return QuadraticOrder::from_discriminant(Int(o.disc));
  if (!o.dk.empty()) return QuadraticOrder(Int(o.dk), Int(o.f));
  throw std::invalid_argument("an order is required: --disc D, or --dk d_K [--f f]");
}

int emit(const ordered_json &doc, const OutputOpts &o) {
  std::string text;
  if (o.format == "json")
    text = doc.dump(2) + "\n";
  else if (o.format == "csv")
    text = qgenus::reports::to_csv(doc);
  else
    text = qgenus::reports::to_table(doc);
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw std::runtime_error("cannot open output file: " + o.out);
    file << text;
  } else {
    std::cout << text;
  }
  return qgenus::reports::report_passed(doc) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"explicit genus theory of quadratic orders"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from an INI/TOML file");

  OrderOpts info_order, cg_order, verify_order, type_order;
  OutputOpts info_out, cg_out, verify_out, sweep_out, type_out;

  CLI::App *info = app.add_subcommand("order-info", "Divisors, characters, genus numbers of one order");
  add_order_opts(info, info_order);
  add_output_opts(info, info_out);

  CLI::App *cg = app.add_subcommand("classgroup", "Narrow and wide class groups with character values");
  add_order_opts(cg, cg_order);
  add_output_opts(cg, cg_out);

  CLI::App *verify = app.add_subcommand("verify", "Check every closed formula for one order");
  long verify_n = 200;
  std::vector<double> verify_s;
  add_order_opts(verify, verify_order);
  verify->add_option("--n", verify_n, "Compare Dirichlet coefficients for n <= N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--s", verify_s, "Evaluation point, repeatable (default 2.0)");
  add_output_opts(verify, verify_out);

  CLI::App *sweep = app.add_subcommand("sweep", "Genus identities across a discriminant range");
  std::string sweep_min, sweep_max, sweep_check = "genus";
  long sweep_n = 100;
  int sweep_jobs = 1;
  sweep->add_option("--dmin", sweep_min, "Smallest discriminant")->required();
  sweep->add_option("--dmax", sweep_max, "Largest discriminant")->required();
  sweep->add_option("--check", sweep_check, "genus: counting identities; lseries: also engine agreement")
      ->check(CLI::IsMember({"genus", "lseries"}))
      ->capture_default_str();
  sweep->add_option("--n", sweep_n, "Coefficient range for --check lseries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--jobs", sweep_jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_output_opts(sweep, sweep_out);

  CLI::App *type = app.add_subcommand("typenumbers", "Type numbers and genus labels of a maximal order");
  long type_bound = 10000;
  add_order_opts(type, type_order);
  type->add_option("--search-bound", type_bound, "Largest prime tried for coset labels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_opts(type, type_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return emit(qgenus::reports::order_info_report(resolve_order(info_order)), info_out);
    if (cg->parsed()) return emit(qgenus::reports::classgroup_report(resolve_order(cg_order)), cg_out);
    if (verify->parsed()) {
      qgenus::reports::VerifyOptions opts;
      opts.n_max = verify_n;
      if (!verify_s.empty()) opts.s_values = verify_s;
      return emit(qgenus::reports::verify_report(resolve_order(verify_order), opts), verify_out);
    }
    if (sweep->parsed()) {
      qgenus::reports::SweepOptions opts;
      opts.d_min = Int(sweep_min);
      opts.d_max = Int(sweep_max);
      opts.lseries = sweep_check == "lseries";
      opts.n_max = sweep_n;
      opts.jobs = sweep_jobs;
      return emit(qgenus::reports::sweep_report(opts), sweep_out);
    }
    if (type->parsed()) {
      qgenus::reports::TypenumbersOptions opts;
      opts.search_bound = type_bound;
      return emit(qgenus::reports::typenumbers_report(resolve_order(type_order), opts), type_out);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
