#include "pavoid/cli.hpp"

#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pavoid/closedform.hpp"
#include "pavoid/enumerate.hpp"
#include "pavoid/errors.hpp"
#include "pavoid/wilf.hpp"

namespace pavoid {

namespace {

using nlohmann::ordered_json;

struct NRange {
  int lo = 0;
  int hi = 0;
};

// "8" or "0..11"
NRange parse_n(const std::string& text) {
  auto pos = text.find("..");
  NRange r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, pos));
      r.hi = std::stoi(text.substr(pos + 2));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse n '" + text + "'; expected '8' or '0..11'");
  } catch (const std::out_of_range&) {
    throw ParseError("n '" + text + "' out of range");
  }
  if (r.lo > r.hi) throw ParseError("empty n range '" + text + "'");
  return r;
}

// "7:11"
Window parse_window(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos)
    throw ParseError("cannot parse window '" + text + "'; expected 'lo:hi'");
  try {
    Window w{std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
    if (w.lo < 0 || w.hi < w.lo) throw ParseError("window '" + text + "' must satisfy 0 <= lo <= hi");
    return w;
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse window '" + text + "'; expected 'lo:hi'");
  } catch (const std::out_of_range&) {
    throw ParseError("window '" + text + "' out of range");
  }
}

EvalMethod parse_method(const std::string& text) {
  if (text == "oracle") return EvalMethod::oracle;
  if (text == "formula") return EvalMethod::formula;
  if (text == "both") return EvalMethod::both;
  throw ParseError("unknown method '" + text + "'; expected oracle, formula or both");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& subcommand) {
  for (const char* a : allowed)
    if (format == a) return;
  throw ParseError("format '" + format + "' not supported by " + subcommand);
}

ordered_json set_json(const PatternSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : s.patterns()) arr.push_back(p.str());
  return arr;
}

ordered_json int64_array(const nlohmann::json& arr) {
  ordered_json out = ordered_json::array();
  for (const auto& v : arr) out.push_back(v.get<long long>());
  return out;
}

long long to_i64(const BigInt& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw DomainError("value exceeds 64-bit output range");
  return static_cast<long long>(v);
}

std::string pair_label(const PatternSet& s, const Permutation& t) {
  return "({" + s.key() + "}, " + t.str() + ")";
}

// --- count ---

int cmd_count(const PatternSet& T, const std::optional<Permutation>& tau, NRange range,
              EvalMethod method, const std::string& format, bool strict, int jobs,
              std::ostream& out) {
  struct Row {
    int n;
    std::optional<BigInt> oracle, formula;
    BigInt value;
    std::string route;
  };
  std::vector<Row> rows;
  for (int n = range.lo; n <= range.hi; ++n) {
    Row r;
    r.n = n;
    if (tau) {
      EvalResult res = evaluate(T, *tau, n, method, jobs);
      r.oracle = res.oracle;
      r.formula = res.formula;
      r.value = res.value;
      r.route = res.route;
    } else {
      if (method == EvalMethod::oracle || method == EvalMethod::both)
        r.oracle = count_avoiders_cached(n, T, jobs);
      if (method == EvalMethod::formula || method == EvalMethod::both) {
        r.formula = base_count(T, n);
        r.route = "base-count";
      }
      r.value = r.oracle ? *r.oracle : *r.formula;
    }
    rows.push_back(std::move(r));
  }
  bool all_agree = true;
  for (const auto& r : rows)
    if (r.oracle && r.formula && *r.oracle != *r.formula) all_agree = false;

  if (format == "json") {
    ordered_json j;
    j["T"] = set_json(T);
    if (tau) j["tau"] = tau->str();
    j["method"] = method == EvalMethod::oracle   ? "oracle"
                  : method == EvalMethod::formula ? "formula"
                                                  : "both";
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json rj;
      rj["n"] = r.n;
      rj["value"] = r.value.str();
      if (r.oracle) rj["oracle"] = r.oracle->str();
      if (r.formula) rj["formula"] = r.formula->str();
      if (method == EvalMethod::both) rj["agree"] = !(r.oracle && r.formula && *r.oracle != *r.formula);
      if (!r.route.empty()) rj["route"] = r.route;
      results.push_back(std::move(rj));
    }
    j["results"] = std::move(results);
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "T,tau,n,method,count\n";
    std::string tkey = "\"" + T.key() + "\"";
    std::string tstr = tau ? tau->str() : "";
    for (const auto& r : rows) {
      if (r.oracle)
        out << tkey << "," << tstr << "," << r.n << ",oracle," << *r.oracle << "\n";
      if (r.formula)
        out << tkey << "," << tstr << "," << r.n << ",formula," << *r.formula << "\n";
    }
  } else {  // text
    for (const auto& r : rows) {
      if (method == EvalMethod::both) {
        out << "n=" << r.n << " oracle=" << (r.oracle ? r.oracle->str() : "n/a")
            << " formula=" << (r.formula ? r.formula->str() : "n/a")
            << ((r.oracle && r.formula && *r.oracle != *r.formula) ? " disagree" : " agree");
        out << "\n";
      } else {
        out << "n=" << r.n << " count=" << r.value;
        if (method == EvalMethod::formula && !r.route.empty()) out << " route=" << r.route;
        out << "\n";
      }
    }
  }
  if (strict && method == EvalMethod::both && !all_agree) return 2;
  return 0;
}

// --- enumerate ---

int cmd_enumerate(const PatternSet& T, const std::optional<Permutation>& tau, int n,
                  const std::string& format, int jobs, std::ostream& out) {
  std::vector<Permutation> perms = enumerate_avoiders(n, T, jobs);
  if (tau) {
    std::vector<Permutation> kept;
    for (auto& p : perms)
      if (p.avoids(*tau)) kept.push_back(std::move(p));
    perms = std::move(kept);
  }
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["avoid"] = set_json(T);
    if (tau) j["tau"] = tau->str();
    j["count"] = perms.size();
    ordered_json arr = ordered_json::array();
    for (const auto& p : perms) arr.push_back(p.str());
    j["permutations"] = std::move(arr);
    out << j.dump() << "\n";
  } else {
    for (const auto& p : perms) out << p.str() << "\n";
  }
  return 0;
}

// --- gf ---

int cmd_gf(const PatternSet& T, const Permutation& tau, std::optional<int> expand_n,
           const std::string& format, int jobs, std::ostream& out) {
  FormulaSpec spec = classify(T, tau, -1, jobs);
  if (spec.kind != FormulaKind::rational_gf)
    throw DomainError("no rational generating function for this pair (kind: " +
                      to_string(spec.kind) + ")");
  std::vector<BigInt> coeffs;
  if (expand_n) {
    if (*expand_n < 0) throw ParseError("--expand needs a nonnegative count");
    coeffs = expand(spec.gf, *expand_n);
  }
  if (format == "json") {
    nlohmann::json flat = gf_to_json(spec.gf);
    ordered_json j;
    j["num"] = int64_array(flat.at("num"));
    j["den"] = int64_array(flat.at("den"));
    if (expand_n) {
      ordered_json arr = ordered_json::array();
      for (const auto& c : coeffs) arr.push_back(to_i64(c));
      j["expansion"] = std::move(arr);
    }
    out << j.dump() << "\n";
  } else {
    out << spec.gf.str() << "\n";
    if (expand_n) {
      out << "expansion:";
      for (const auto& c : coeffs) out << " " << c;
      out << "\n";
    }
  }
  return 0;
}

// --- classify ---

ordered_json spec_parameters(const FormulaSpec& spec) {
  ordered_json p;
  switch (spec.kind) {
    case FormulaKind::rational_gf: {
      nlohmann::json flat = gf_to_json(spec.gf);
      p["num"] = int64_array(flat.at("num"));
      p["den"] = int64_array(flat.at("den"));
      break;
    }
    case FormulaKind::linear:
      p["slope"] = spec.slope;
      p["intercept"] = spec.intercept;
      break;
    case FormulaKind::binomial_sum:
      p["sum_upper"] = spec.sum_upper;
      break;
    case FormulaKind::constant:
      p["value"] = spec.constant.str();
      break;
    case FormulaKind::kronecker:
      p["base"] = spec.kron_base;
      p["subtract_increasing"] = spec.kron_sub_inc;
      p["subtract_decreasing"] = spec.kron_sub_dec;
      p["tau_increasing"] = spec.tau_increasing;
      p["tau_decreasing"] = spec.tau_decreasing;
      break;
    case FormulaKind::eventually_zero:
      p["zero_from"] = spec.zero_from;
      break;
  }
  return p;
}

ordered_json status_json(const VerifyStatus& st) {
  ordered_json j;
  switch (st.kind) {
    case VerifyStatus::Kind::unverified:
      j["kind"] = "unverified";
      break;
    case VerifyStatus::Kind::verified_to:
      j["kind"] = "verified_to";
      j["n"] = st.n;
      break;
    case VerifyStatus::Kind::discrepant_at:
      j["kind"] = "discrepant_at";
      j["n"] = st.n;
      j["printed"] = st.printed.str();
      j["true"] = st.oracle.str();
      break;
  }
  return j;
}

std::string spec_parameters_text(const FormulaSpec& spec) {
  std::ostringstream s;
  switch (spec.kind) {
    case FormulaKind::rational_gf:
      s << "gf: " << spec.gf.str();
      break;
    case FormulaKind::linear:
      s << "formula: " << spec.slope << "n" << (spec.intercept < 0 ? " - " : " + ")
        << (spec.intercept < 0 ? -spec.intercept : spec.intercept);
      break;
    case FormulaKind::binomial_sum:
      s << "formula: sum_{j=0}^{" << spec.sum_upper << "} C(n-1, j)";
      break;
    case FormulaKind::constant:
      s << "constant: " << spec.constant;
      break;
    case FormulaKind::kronecker:
      s << "base: " << spec.kron_base << ", subtract_increasing: " << spec.kron_sub_inc
        << ", subtract_decreasing: " << spec.kron_sub_dec
        << ", tau_increasing: " << spec.tau_increasing
        << ", tau_decreasing: " << spec.tau_decreasing;
      break;
    case FormulaKind::eventually_zero:
      s << "zero_from: " << spec.zero_from;
      break;
  }
  return s.str();
}

int cmd_classify(const PatternSet& T, const Permutation& tau, int verify_to,
                 const std::string& format, int jobs, std::ostream& out) {
  FormulaSpec spec = classify(T, tau, verify_to, jobs);
  if (format == "json") {
    ordered_json j;
    j["kind"] = to_string(spec.kind);
    j["parameters"] = spec_parameters(spec);
    j["validity_from"] = spec.validity_from;
    j["provenance"] = spec.provenance;
    j["status"] = status_json(spec.status);
    out << j.dump() << "\n";
  } else {
    out << "kind: " << to_string(spec.kind) << "\n";
    out << spec_parameters_text(spec) << "\n";
    out << "validity_from: " << spec.validity_from << "\n";
    out << "provenance: " << spec.provenance << "\n";
    out << "status: " << spec.status.str() << "\n";
  }
  return 0;
}

// --- verify ---

int cmd_verify(int k_max, int n_max, const std::string& format, int jobs,
               std::ostream& out) {
  VerifyReport report = verify_closed_forms(k_max, n_max, jobs);
  if (format == "json") {
    out << verify_to_json(report).dump() << "\n";
    return 0;
  }
  auto bad = report.discrepancies();
  out << "checked " << report.entries.size() << " closed forms for k = 4.."
      << report.k_max << " against the oracle up to n = " << report.n_max << "\n";
  out << "discrepant: " << bad.size() << "\n";
  for (const auto& e : bad)
    out << pair_label(e.set, e.tau) << ": " << e.spec.status.str() << " ["
        << e.spec.provenance << "]\n";
  return 0;
}

// --- wilf-table ---

int cmd_wilf_table(Window window, const std::string& format, int jobs, std::ostream& out) {
  WilfClassReport report = table_s3_s4(window, window.hi, jobs);
  if (format == "json") {
    out << report_to_json(report).dump() << "\n";
    return 0;
  }
  size_t population = 0;
  for (const auto& c : report.classes) population += c.size;

  // Row status: locate each reference row's diff entry, if any.
  auto diff_for = [&](const TableRow& row) -> const TableDiffEntry* {
    for (const auto& d : report.table_diff)
      if (d.rep_set == row.set && d.rep_tau == row.tau) return &d;
    return nullptr;
  };

  if (format == "md") {
    out << "window: [" << window.lo << "," << window.hi << "]; " << population
        << " pairs in " << report.classes.size() << " classes\n\n";
    out << "| representative | \\|C\\| | formula | status |\n";
    out << "|---|---:|---|---|\n";
    for (const auto& row : embedded_table()) {
      const TableDiffEntry* d = diff_for(row);
      out << "| " << pair_label(row.set, row.tau) << " | " << row.size << " | "
          << row.formula << " | ";
      if (!d) {
        out << "ok";
      } else {
        if (d->expected_size != d->computed_size)
          out << "size: computed " << d->computed_size;
        if (d->expected_formula != d->matched_formula) {
          if (d->expected_size != d->computed_size) out << "; ";
          out << "formula: matched " << d->matched_formula;
        }
      }
      out << " |\n";
    }
    if (!report.table_diff.empty()) {
      out << "\ndifferences:\n\n";
      for (const auto& d : report.table_diff) out << "- " << d.explanation << "\n";
    }
  } else {  // text
    out << "window: [" << window.lo << "," << window.hi << "]\n";
    out << "population: " << population << " pairs, " << report.classes.size()
        << " classes\n";
    for (const auto& row : embedded_table()) {
      const TableDiffEntry* d = diff_for(row);
      out << pair_label(row.set, row.tau) << " size=" << row.size
          << " formula=" << row.formula
          << (d ? " DIFFERS (computed " + std::to_string(d->computed_size) + ")" : " ok")
          << "\n";
    }
    for (const auto& d : report.table_diff) out << "diff: " << d.explanation << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counting of permutations avoiding a length-3 set and one extra pattern"};
  app.name("pavoid");
  app.require_subcommand(1);

  std::string avoid_text, tau_text, n_text = "0..8", method_text = "oracle";
  std::string format = "text", window_text = "7:11";
  int jobs = 0, expand_n = -1, verify_to = 11, k_max = 4, n_max = 11;
  bool strict = false;

  auto add_common = [&](CLI::App* sub, bool needs_avoid) {
    auto* opt = sub->add_option("--avoid", avoid_text, "comma-separated patterns, e.g. 123,132");
    if (needs_avoid) opt->required();
    sub->add_option("--jobs", jobs, "worker threads (0 = all available)");
    sub->add_option("--format", format, "output format");
  };

  CLI::App* count = app.add_subcommand("count", "count avoiders |S_n(T, tau)|");
  add_common(count, true);
  count->add_option("--tau", tau_text, "extra pattern");
  count->add_option("--n", n_text, "single n or range lo..hi")->required();
  count->add_option("--method", method_text, "oracle, formula or both");
  count->add_flag("--strict", strict, "exit 2 when oracle and formula disagree");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list avoiders in lexicographic order");
  add_common(enumerate, false);
  enumerate->add_option("--tau", tau_text, "extra pattern");
  enumerate->add_option("--n", n_text, "length")->required();

  CLI::App* gf = app.add_subcommand("gf", "rational generating function for the pair");
  add_common(gf, true);
  gf->add_option("--tau", tau_text, "extra pattern")->required();
  gf->add_option("--expand", expand_n, "also print series coefficients 0..N");

  CLI::App* classify_cmd = app.add_subcommand("classify", "closed form with oracle verdict");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--tau", tau_text, "extra pattern")->required();
  classify_cmd->add_option("--verify-to", verify_to, "oracle comparison horizon");

  CLI::App* verify = app.add_subcommand("verify", "audit every closed form against the oracle");
  verify->add_option("--k-max", k_max, "largest tau length (4..6)");
  verify->add_option("--n-max", n_max, "oracle comparison horizon (<= 11)");
  verify->add_option("--jobs", jobs, "worker threads (0 = all available)");
  verify->add_option("--format", format, "output format");

  CLI::App* wilf = app.add_subcommand("wilf-table", "class partition vs the reference table");
  wilf->add_option("--window", window_text, "grouping window lo:hi");
  wilf->add_option("--jobs", jobs, "worker threads (0 = all available)");
  wilf->add_option("--format", format, "output format");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("pavoid");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& a : full) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (count->parsed()) {
      require_format(format, {"text", "json", "csv"}, "count");
      PatternSet T = PatternSet::parse(avoid_text);
      std::optional<Permutation> tau;
      if (!tau_text.empty()) tau = Permutation::parse(tau_text);
      return cmd_count(T, tau, parse_n(n_text), parse_method(method_text), format, strict,
                       jobs, out);
    }
    if (enumerate->parsed()) {
      require_format(format, {"text", "json"}, "enumerate");
      PatternSet T = PatternSet::parse(avoid_text);
      std::optional<Permutation> tau;
      if (!tau_text.empty()) tau = Permutation::parse(tau_text);
      NRange r = parse_n(n_text);
      if (r.lo != r.hi) throw ParseError("enumerate needs a single n, not a range");
      return cmd_enumerate(T, tau, r.lo, format, jobs, out);
    }
    if (gf->parsed()) {
      require_format(format, {"text", "json"}, "gf");
      PatternSet T = PatternSet::parse(avoid_text);
      Permutation tau = Permutation::parse(tau_text);
      std::optional<int> ex;
      if (gf->count("--expand") > 0) ex = expand_n;
      return cmd_gf(T, tau, ex, format, jobs, out);
    }
    if (classify_cmd->parsed()) {
      require_format(format, {"text", "json"}, "classify");
      PatternSet T = PatternSet::parse(avoid_text);
      Permutation tau = Permutation::parse(tau_text);
      return cmd_classify(T, tau, verify_to, format, jobs, out);
    }
    if (verify->parsed()) {
      require_format(format, {"text", "json"}, "verify");
      return cmd_verify(k_max, n_max, format, jobs, out);
    }
    if (wilf->parsed()) {
      require_format(format, {"text", "json", "md"}, "wilf-table");
      return cmd_wilf_table(parse_window(window_text), format, jobs, out);
    }
    err << "error: no subcommand given\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pavoid
