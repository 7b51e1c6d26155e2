#include "qgenus/reports.hpp"

#include "qgenus/classgroup.hpp"
#include "qgenus/forms.hpp"
#include "qgenus/ideals.hpp"
#include "qgenus/lseries.hpp"
#include "qgenus/typenumbers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qgenus::reports {

namespace {

std::string str(const Int &v) { return v.get_str(); }

std::string chi_name(const GenusCharacter &chi) { return "(" + str(chi.delta1) + ", " + str(chi.delta2) + ")"; }

std::string form_str(const BinaryQuadraticForm &q) {
  return "(" + str(q.a) + ", " + str(q.b) + ", " + str(q.c) + ")";
}

std::string structure_str(const std::vector<Int> &inv) {
  if (inv.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + str(inv[i]);
  }
  return out;
}

std::string fmt(double v, int prec = 12) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

ordered_json order_config(const QuadraticOrder &order, const char *command) {
  ordered_json c;
  c["command"] = command;
  c["discriminant"] = str(order.discriminant());
  c["fundamental_discriminant"] = str(order.fundamental_discriminant());
  c["conductor"] = str(order.conductor());
  return c;
}

// Expected number of proper ideals of norm n from the local closed form.
Int expected_ideal_count(const QuadraticOrder &order, long n) {
  if (n == 1) return 1;
  Int total = 1;
  for (const auto &[p, k] : factorize(Int(n)).factors) total *= count_proper_ideals_local(order, p, k);
  return total;
}

} // namespace

ordered_json order_info_report(const QuadraticOrder &order) {
  ordered_json doc;
  doc["config"] = order_config(order, "order-info");
  ordered_json results = ordered_json::array();
  for (const GenusCharacter &chi : genus_characters(order)) {
    ordered_json row;
    row["kind"] = "character";
    row["delta1"] = str(chi.delta1);
    row["delta2"] = str(chi.delta2);
    row["f1"] = str(chi.f1);
    row["f0"] = str(chi.f0);
    row["trivial"] = chi.trivial();
    results.push_back(row);
  }
  for (const auto &[p, e] : factorize(order.discriminant()).factors) {
    ordered_json row;
    row["kind"] = "local-norm-index";
    row["p"] = str(p);
    row["index"] = str(local_norm_index(order, p));
    results.push_back(row);
  }
  doc["results"] = results;
  ordered_json fd = ordered_json::array();
  for (const Int &d : fundamental_divisors(order)) fd.push_back(str(d));
  ordered_json sum;
  sum["fundamental_divisors"] = fd;
  sum["genus_number_narrow"] = str(genus_number_narrow(order));
  sum["genus_number_wide"] = str(genus_number_wide(order));
  if (order.real()) sum["minus_one_is_norm"] = minus_one_is_norm(order);
  doc["summary"] = sum;
  return doc;
}

ordered_json classgroup_report(const QuadraticOrder &order) {
  ordered_json doc;
  doc["config"] = order_config(order, "classgroup");
  NarrowClassGroup narrow(order);
  WideClassGroup wide(narrow);
  CharacterTable chars(narrow);
  std::vector<GenusCharacter> characters = genus_characters(order);
  ordered_json results = ordered_json::array();
  for (std::size_t i = 0; i < narrow.size(); ++i) {
    ordered_json row;
    row["class"] = i;
    row["form"] = form_str(narrow.representatives()[i]);
    row["principal"] = (i == narrow.principal_id());
    row["wide_class"] = wide.class_of_narrow(i);
    row["witness"] = str(chars.witness(i));
    for (const GenusCharacter &chi : characters) row["chi" + chi_name(chi)] = chars.value(chi, i);
    results.push_back(row);
  }
  doc["results"] = results;
  ordered_json sum;
  sum["h_narrow"] = narrow.size();
  sum["h_wide"] = wide.size();
  sum["structure_narrow"] = structure_str(narrow.structure());
  sum["structure_wide"] = structure_str(wide.structure());
  sum["squares_narrow"] = squares_subgroup(narrow).size();
  sum["squares_wide"] = squares_subgroup(wide).size();
  sum["genus_number_narrow"] = str(genus_number_narrow(order));
  sum["genus_number_wide"] = str(genus_number_wide(order));
  doc["summary"] = sum;
  return doc;
}

ordered_json verify_report(const QuadraticOrder &order, const VerifyOptions &opts) {
  if (opts.n_max < 1) throw std::invalid_argument("verify: n must be positive");
  ordered_json doc;
  ordered_json config = order_config(order, "verify");
  config["n"] = opts.n_max;
  config["s"] = opts.s_values;
  doc["config"] = config;

  NarrowClassGroup narrow(order);
  WideClassGroup wide(narrow);
  CharacterTable chars(narrow);
  IdealClassTable ideals(narrow, opts.n_max);
  std::vector<GenusCharacter> characters = genus_characters(order);

  ordered_json results = ordered_json::array();
  long passed = 0, failed = 0, skipped = 0;
  auto add = [&](const std::string &check, const std::string &character, const ordered_json &s,
                 bool ok, const std::string &detail) {
    ordered_json row;
    row["check"] = check;
    row["character"] = character;
    row["s"] = s;
    row["status"] = ok ? "pass" : "fail";
    row["detail"] = detail;
    results.push_back(row);
    (ok ? passed : failed) += 1;
  };
  auto skip = [&](const std::string &check, const std::string &character, const ordered_json &s,
                  const std::string &detail) {
    ordered_json row;
    row["check"] = check;
    row["character"] = character;
    row["s"] = s;
    row["status"] = "skip";
    row["detail"] = detail;
    results.push_back(row);
    ++skipped;
  };

  Int g_narrow = genus_number_narrow(order);
  {
    Int quotient = Int(narrow.size() / squares_subgroup(narrow).size());
    bool ok = g_narrow == Int(characters.size()) && g_narrow == quotient;
    add("genus-number-narrow", "", nullptr, ok,
        "formula=" + str(g_narrow) + " characters=" + std::to_string(characters.size()) +
            " quotient=" + str(quotient));
  }
  {
    Int g_wide = genus_number_wide(order);
    Int quotient = Int(wide.size() / squares_subgroup(wide).size());
    add("genus-number-wide", "", nullptr, g_wide == quotient,
        "formula=" + str(g_wide) + " quotient=" + str(quotient));
  }
  {
    Int prod = 1;
    for (const auto &[p, e] : factorize(order.discriminant()).factors) prod *= local_norm_index(order, p);
    add("local-norm-index-product", "", nullptr, prod == 2 * g_narrow,
        "product=" + str(prod) + " expected=" + str(2 * g_narrow));
  }
  {
    std::string detail = "counts match for all n <= " + std::to_string(opts.n_max);
    bool ok = true;
    for (long n = 1; n <= opts.n_max && ok; ++n) {
      Int expected = expected_ideal_count(order, n);
      Int actual = Int(ideals.classes(n).size());
      if (expected != actual) {
        ok = false;
        detail = "n=" + std::to_string(n) + " closed-form=" + str(expected) + " enumeration=" + str(actual);
      }
    }
    add("ideal-counts", "", nullptr, ok, detail);
  }

  double majorant = coefficient_majorant(order).get_d();
  for (const GenusCharacter &chi : characters) {
    CoefficientSeries brute = lhs_coeffs_bruteforce(chars, ideals, chi);
    CoefficientSeries local = lhs_coeffs_local(order, chi, opts.n_max);
    CoefficientSeries closed = rhs_coeffs(order, chi, opts.n_max);
    std::optional<SeriesMismatch> m12 = compare_series(brute, local);
    std::optional<SeriesMismatch> m13 = compare_series(brute, closed);
    std::string detail;
    if (!m12 && !m13) {
      detail = "three engines identical for n <= " + std::to_string(opts.n_max);
    } else {
      long n = m12 ? m12->n : m13->n;
      detail = "first mismatch at n=" + std::to_string(n) + ": ideal-sum=" + str(brute.at(n)) +
               " local=" + str(local.at(n)) + " closed-form=" + str(closed.at(n));
    }
    add("engines-agree", chi_name(chi), nullptr, !m12 && !m13, detail);

    for (double s : opts.s_values) {
      if (!(s > 1.0)) {
        skip("evaluation", chi_name(chi), s, "series diverges at s <= 1");
        continue;
      }
      Evaluation lhs = evaluate(brute, s, majorant);
      Evaluation rhs = evaluate_closed_form(order, chi, s, opts.n_max);
      std::string num = "lhs=" + fmt(lhs.value) + " (tail " + fmt(lhs.tail_bound, 3) + ") rhs=" + fmt(rhs.value) +
                        " (tail " + fmt(rhs.tail_bound, 3) + ") diff=" + fmt(std::abs(lhs.value - rhs.value), 3);
      if (!std::isfinite(lhs.tail_bound)) {
        skip("evaluation", chi_name(chi), s, num + "; no finite tail bound for s <= 3/2");
        continue;
      }
      bool ok = std::abs(lhs.value - rhs.value) <= lhs.tail_bound + rhs.tail_bound + 1e-9;
      add("evaluation", chi_name(chi), s, ok, num);
    }
  }

  doc["results"] = results;
  ordered_json sum;
  sum["checks"] = passed + failed + skipped;
  sum["passed"] = passed;
  sum["failed"] = failed;
  sum["skipped"] = skipped;
  sum["status"] = failed == 0 ? "pass" : "fail";
  doc["summary"] = sum;
  return doc;
}

namespace {

ordered_json sweep_row(const Int &D, const SweepOptions &opts) {
  QuadraticOrder order = QuadraticOrder::from_discriminant(D);
  NarrowClassGroup narrow(order);
  WideClassGroup wide(narrow);
  Int gn_formula = genus_number_narrow(order);
  Int gw_formula = genus_number_wide(order);
  Int gn_group = Int(narrow.size() / squares_subgroup(narrow).size());
  Int gw_group = Int(wide.size() / squares_subgroup(wide).size());
  bool ok = gn_formula == gn_group && gw_formula == gw_group;
  ordered_json row;
  row["D"] = str(D);
  row["d_k"] = str(order.fundamental_discriminant());
  row["f"] = str(order.conductor());
  row["h_narrow"] = narrow.size();
  row["h_wide"] = wide.size();
  row["genus_narrow_formula"] = str(gn_formula);
  row["genus_narrow_group"] = str(gn_group);
  row["genus_wide_formula"] = str(gw_formula);
  row["genus_wide_group"] = str(gw_group);
  if (opts.lseries) {
    CharacterTable chars(narrow);
    IdealClassTable ideals(narrow, opts.n_max);
    std::string engines = "pass";
    for (const GenusCharacter &chi : genus_characters(order)) {
      CoefficientSeries brute = lhs_coeffs_bruteforce(chars, ideals, chi);
      CoefficientSeries local = lhs_coeffs_local(order, chi, opts.n_max);
      CoefficientSeries closed = rhs_coeffs(order, chi, opts.n_max);
      if (compare_series(brute, local) || compare_series(brute, closed)) {
        engines = "fail at chi=" + chi_name(chi);
        ok = false;
        break;
      }
    }
    row["engines"] = engines;
  }
  row["status"] = ok ? "pass" : "fail";
  return row;
}

} // namespace

ordered_json sweep_report(const SweepOptions &opts) {
  if (opts.d_min > opts.d_max) throw std::invalid_argument("sweep: d_min must not exceed d_max");
  std::vector<Int> discs;
  for (Int D = opts.d_min; D <= opts.d_max; ++D)
    if (is_valid_discriminant(D)) discs.push_back(D);

  std::vector<ordered_json> rows(discs.size());
  unsigned jobs = opts.jobs < 1 ? 1u : static_cast<unsigned>(opts.jobs);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < discs.size(); ++i) rows[i] = sweep_row(discs[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= discs.size()) return;
        rows[i] = sweep_row(discs[i], opts);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread &t : pool) t.join();
  }

  ordered_json doc;
  ordered_json config;
  config["command"] = "sweep";
  config["d_min"] = str(opts.d_min);
  config["d_max"] = str(opts.d_max);
  config["check"] = opts.lseries ? "lseries" : "genus";
  if (opts.lseries) config["n"] = opts.n_max;
  config["jobs"] = opts.jobs;
  doc["config"] = config;
  long passed = 0, failed = 0;
  ordered_json results = ordered_json::array();
  for (ordered_json &row : rows) {
    (row["status"] == "pass" ? passed : failed) += 1;
    results.push_back(std::move(row));
  }
  doc["results"] = results;
  ordered_json sum;
  sum["discriminants"] = discs.size();
  sum["passed"] = passed;
  sum["failed"] = failed;
  sum["status"] = failed == 0 ? "pass" : "fail";
  doc["summary"] = sum;
  return doc;
}

ordered_json typenumbers_report(const QuadraticOrder &order, const TypenumbersOptions &opts) {
  ordered_json doc;
  ordered_json config = order_config(order, "typenumbers");
  config["search_bound"] = opts.search_bound;
  doc["config"] = config;
  ordered_json results = ordered_json::array();
  Int t_narrow = type_number_narrow(order);
  Int t_wide = type_number_wide(order);
  bool ok = true;
  for (ClassSense sense : {ClassSense::Narrow, ClassSense::Wide}) {
    std::vector<MaximalOrderRep> reps = representatives(order, sense, opts.search_bound);
    const Int &expect = sense == ClassSense::Narrow ? t_narrow : t_wide;
    if (Int(reps.size()) != expect) ok = false;
    for (const MaximalOrderRep &rep : reps) {
      ordered_json row;
      row["sense"] = sense == ClassSense::Narrow ? "narrow" : "wide";
      row["coset"] = rep.coset_id;
      row["principal"] = rep.principal;
      if (rep.ideal) {
        row["label"] = "(" + str(rep.ideal->a) + ", " + str(rep.ideal->b) + ")";
        row["norm"] = str(rep.ideal->norm());
      } else {
        row["label"] = "O_K";
        row["norm"] = "1";
      }
      results.push_back(row);
    }
  }
  doc["results"] = results;
  ordered_json sum;
  sum["type_number_narrow"] = str(t_narrow);
  sum["type_number_wide"] = str(t_wide);
  ordered_json pd = ordered_json::array();
  for (const Int &d : prime_discriminant_decomposition(order.fundamental_discriminant())) pd.push_back(str(d));
  sum["prime_discriminants"] = pd;
  if (order.real()) sum["minus_one_is_norm"] = minus_one_is_norm(order);
  sum["status"] = ok ? "pass" : "fail";
  doc["summary"] = sum;
  return doc;
}

namespace {

std::string cell_text(const ordered_json &v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> column_order(const ordered_json &results) {
  std::vector<std::string> cols;
  for (const ordered_json &row : results)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

} // namespace

std::string to_csv(const ordered_json &report) {
  const ordered_json &results = report.at("results");
  std::vector<std::string> cols = column_order(results);
  std::string out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(cols[c]);
  }
  out += '\n';
  for (const ordered_json &row : results) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out += ',';
      if (row.contains(cols[c])) out += csv_escape(cell_text(row.at(cols[c])));
    }
    out += '\n';
  }
  return out;
}

std::string to_table(const ordered_json &report) {
  std::ostringstream os;
  if (report.contains("config")) {
    os << "config:";
    for (auto it = report.at("config").begin(); it != report.at("config").end(); ++it)
      os << " " << it.key() << "=" << cell_text(it.value());
    os << "\n\n";
  }
  const ordered_json &results = report.at("results");
  std::vector<std::string> cols = column_order(results);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> grid;
  for (const ordered_json &row : results) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      cells.push_back(row.contains(cols[c]) ? cell_text(row.at(cols[c])) : "");
      width[c] = std::max(width[c], cells.back().size());
    }
    grid.push_back(std::move(cells));
  }
  for (std::size_t c = 0; c < cols.size(); ++c)
    os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cols[c];
  os << "\n";
  for (const std::vector<std::string> &cells : grid) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
    os << "\n";
  }
  if (report.contains("summary")) {
    os << "\nsummary:";
    for (auto it = report.at("summary").begin(); it != report.at("summary").end(); ++it)
      os << " " << it.key() << "=" << cell_text(it.value());
    os << "\n";
  }
  return os.str();
}

bool report_passed(const ordered_json &report) {
  if (!report.contains("summary")) return true;
  const ordered_json &sum = report.at("summary");
  if (!sum.contains("status")) return true;
  return sum.at("status") == "pass";
}

} // namespace qgenus::reports
