#ifndef PILLAI_CLI_HPP
#define PILLAI_CLI_HPP

// Command-line front end. `run_cli` parses argv and dispatches; every
// command writes results to `out` and progress to `err`, so the whole
// interface is testable in-process.
//
// Exit codes: 0 ok, 1 checks failed, 2 usage or domain error, 3 integrity
// error (checkpoint), 4 precision cap exceeded.

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pillai/audit.hpp"
#include "pillai/bounds.hpp"
#include "pillai/cf.hpp"
#include "pillai/errors.hpp"
#include "pillai/fib.hpp"
#include "pillai/search.hpp"
#include "pillai/search_record.hpp"
#include "pillai/verify.hpp"

namespace pillai::cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kIntegrity = 3, kPrecision = 4 };

struct RunConfig {
  std::string command;
  std::string mode = "l3zero";  // search
  std::string chain;            // audit
  std::optional<FibIndex> k_max;
  std::optional<unsigned long> p_min;  // search: 5, scan: 2
  std::string p_max = "100";
  unsigned jobs = 0;  // 0 until resolved to hardware threads
  std::optional<std::string> checkpoint;
  std::string format = "text";
  mpfr_prec_t precision = kDefaultPrecision;
  bool fast = false;
  bool json = false;
  bool extend = false;
  bool stream = true;
  std::string p;
  std::string c;
  unsigned long s = 1;
  unsigned long r = 0;
  int t = 3;
  int D = 2;
  std::string T = "30";
  std::string log_a1 = "0.5";
  std::string log_a2 = "0.5";
  std::string b1 = "1";
  std::string b2 = "1";
  std::optional<std::string> M;
  std::optional<std::size_t> terms;
  bool golden = false;
  bool dump = false;
  FibIndex n = 0;
  bool lucas = false;
  std::size_t threshold = 3;
  std::vector<int> criteria;
  std::vector<std::string> properties;

  void validate() const {
    if (jobs < 1) throw DomainError("--jobs must be >= 1");
    if (k_max && *k_max < 2) throw DomainError("--kmax must be >= 2");
    if (format != "json" && format != "csv" && format != "text") throw DomainError("--format must be json, csv or text");
    if (precision < 32) throw DomainError("--precision must be >= 32 bits");
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"jobs", jobs}, {"format", format}, {"precision", precision}};
    if (k_max) j["k_max"] = *k_max;
    if (command == "search") {
      j["mode"] = mode;
      j["p_min"] = mode == "l3pos" ? 5 : p_min.value_or(5);
      j["checkpoint"] = checkpoint ? nlohmann::json(*checkpoint) : nlohmann::json(nullptr);
      j["extend"] = extend;
    }
    if (command == "count") {
      j["p"] = p;
      j["c"] = c;
    }
    if (command == "scan") {
      j["p_min"] = p_min.value_or(2);
      j["p_max"] = p_max;
      j["threshold"] = threshold;
    }
    if (command == "audit") j["chain"] = chain;
    return j;
  }
};

namespace detail {

inline nlohmann::json record_json(const search::SearchRecord& r) {
  return {{"k2", r.k2}, {"k3", r.k3}, {"p", to_decimal(r.p)}, {"l2", r.l2}, {"l3", r.l3}};
}

inline nlohmann::json envelope(const RunConfig& cfg, nlohmann::json records, nlohmann::json counts, double elapsed) {
  return {{"command", cfg.command}, {"config", cfg.to_json()}, {"records", std::move(records)},
          {"counts", std::move(counts)}, {"elapsed_s", elapsed}};
}

inline Nat parse_nat(const std::string& s, const char* what) {
  const Int v = parse_integer_literal(s);
  if (v < 0) throw DomainError(std::string(what) + " must be nonnegative");
  return v;
}

inline double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// ---- search -------------------------------------------------------------------

inline int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k_max) throw DomainError("search needs --kmax");
  if (cfg.mode != "l3zero" && cfg.mode != "l3pos") throw DomainError("--mode must be l3zero or l3pos");
  search::SearchOptions opts;
  opts.jobs = cfg.jobs;
  if (cfg.checkpoint) opts.checkpoint = *cfg.checkpoint;
  if (cfg.stream) {
    opts.on_record = [&err](const search::SearchRecord& r) { err << "record " << search::to_csv_row(r) << "\n"; };
  }
  const auto report = cfg.mode == "l3zero" ? search::search_l3_zero(*cfg.k_max, cfg.p_min.value_or(5), opts)
                                           : search::search_l3_positive(*cfg.k_max, opts);
  err << "search " << cfg.mode << ": " << report.records.size() << " records, " << report.shards_done << "/"
      << report.shards_total << " shards (" << report.shards_resumed << " resumed), " << report.elapsed_s << " s\n";

  std::map<std::string, std::size_t> counts = report.counts;
  std::vector<std::pair<search::SearchRecord, std::vector<search::Representation>>> ext;
  if (cfg.extend && cfg.mode == "l3zero") {
    const auto F = fib_table(*cfg.k_max, search::kSearchWindow);
    std::size_t hits = 0;
    for (const auto& r : report.records) {
      auto e = search::extend_to_k1(r, *cfg.k_max, &F);
      hits += e.size();
      if (!e.empty()) ext.emplace_back(r, std::move(e));
    }
    counts["extensions"] = hits;
  }

  if (cfg.format == "csv") {
    out << search::kCsvHeader << "\n";
    for (const auto& r : report.records) out << search::to_csv_row(r) << "\n";
  } else if (cfg.format == "json") {
    auto recs = nlohmann::json::array();
    for (const auto& r : report.records) recs.push_back(detail::record_json(r));
    auto env = detail::envelope(cfg, std::move(recs), counts, report.elapsed_s);
    env["domain"] = report.domain;
    env["complete"] = report.complete;
    if (cfg.extend) {
      auto ej = nlohmann::json::array();
      for (const auto& [r, e] : ext) {
        auto reps = nlohmann::json::array();
        for (const auto& x : e) reps.push_back({{"k1", x.k}, {"l1", x.ell}});
        ej.push_back({{"base", detail::record_json(r)}, {"extensions", reps}});
      }
      env["extensions"] = ej;
    }
    out << env.dump(2) << "\n";
  } else {
    out << "mode " << report.mode << "\n" << "domain " << report.domain << "\n";
    for (const auto& [k, v] : counts) out << "count " << k << " " << v << "\n";
    for (const auto& r : report.records) out << search::to_csv_row(r) << "\n";
    for (const auto& [r, e] : ext) {
      out << "extension " << search::to_csv_row(r) << " ->";
      for (const auto& x : e) out << " (" << x.k << "," << x.ell << ")";
      out << "\n";
    }
  }
  return report.complete ? kOk : kChecksFailed;
}

// ---- count / scan -------------------------------------------------------------

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.p.empty() || cfg.c.empty()) throw DomainError("count needs -p and -c");
  const Nat p = detail::parse_nat(cfg.p, "p");
  const Int c = parse_integer_literal(cfg.c);
  const FibIndex k_max = cfg.k_max.value_or(1000);
  const auto t0 = std::chrono::steady_clock::now();
  const auto reps = search::count_representations(p, c, k_max);
  if (cfg.format == "json") {
    auto recs = nlohmann::json::array();
    for (const auto& r : reps) recs.push_back({{"k", r.k}, {"l", r.ell}});
    out << detail::envelope(cfg, recs, {{"m", reps.size()}}, detail::since(t0)).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "k,l\n";
    for (const auto& r : reps) out << r.k << "," << r.ell << "\n";
  } else {
    out << "m=" << reps.size();
    for (const auto& r : reps) out << " (" << r.k << "," << r.ell << ")";
    out << "\n";
  }
  return kOk;
}

inline int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Nat p_max = detail::parse_nat(cfg.p_max, "pmax");
  const FibIndex k_max = cfg.k_max.value_or(300);
  const auto res = search::multiplicity_scan(p_max, k_max, Nat(cfg.p_min.value_or(2)), cfg.threshold);
  err << "scan: " << res.pairs_examined << " (k, l) pairs\n";
  if (cfg.format == "json") {
    auto recs = nlohmann::json::array();
    for (const auto& w : res.witnesses) {
      auto reps = nlohmann::json::array();
      for (const auto& r : w.reps) reps.push_back({{"k", r.k}, {"l", r.ell}});
      recs.push_back({{"p", to_decimal(w.p)}, {"c", to_decimal(w.c)}, {"m", w.reps.size()}, {"reps", reps}});
    }
    nlohmann::json by_p = nlohmann::json::object();
    for (const auto& [p, m] : res.max_by_p) by_p[to_decimal(p)] = m;
    auto env = detail::envelope(cfg, recs, {{"max_m", res.max_m}, {"pairs_examined", res.pairs_examined}}, 0.0);
    env["max_by_p"] = by_p;
    env["domain"] = res.domain;
    out << env.dump(2) << "\n";
  } else {
    out << "max_m " << res.max_m << "\n" << "domain " << res.domain << "\n";
    for (const auto& w : res.witnesses) {
      out << "p=" << w.p << " c=" << w.c << " m=" << w.reps.size() << ":";
      for (const auto& r : w.reps) out << " (" << r.k << "," << r.ell << ")";
      out << "\n";
    }
  }
  return kOk;
}

// ---- audit --------------------------------------------------------------------

inline void print_audit_text(const audit::BoundAudit& a, mpfr_prec_t prec, std::ostream& out) {
  out << "chain " << a.chain << "\n";
  for (const auto& e : a.entries) {
    out << std::left << std::setw(12) << e.status << std::setw(44) << e.label << " computed "
        << audit::fmt(e.computed, 6, prec) << "  paper " << e.paper.value_or("-");
    if (e.paper) out << "  dev " << std::setprecision(3) << e.rel_dev * 100 << "%";
    if (e.end_to_end) out << "  end-to-end " << audit::fmt(*e.end_to_end, 6, prec);
    if (e.theorem_faithful) out << "  D^4 " << audit::fmt(*e.theorem_faithful, 6, prec);
    out << "\n";
    if (!e.note.empty()) out << "    note: " << e.note << "\n";
  }
  for (const auto& n : a.notes) out << "note: " << n << "\n";
}

inline int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const bool json = cfg.format == "json" || cfg.json;
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.chain == "k1" || cfg.chain == "absolute") {
    const auto a = cfg.chain == "k1" ? audit::audit_k1_chain(cfg.p.empty() ? Nat(5) : detail::parse_nat(cfg.p, "p"))
                                     : audit::audit_absolute_chain();
    if (json) {
      auto j = audit::to_json(a, cfg.precision);
      out << detail::envelope(cfg, j["entries"], {{"unflagged_pass", a.unflagged_pass()}}, detail::since(t0)).dump(2)
          << "\n";
    } else {
      print_audit_text(a, cfg.precision, out);
    }
    return a.unflagged_pass() ? kOk : kChecksFailed;
  }

  using bounds::Real;
  auto dec = [](const std::string& s) { return bounds::dec(s); };
  nlohmann::json values = nlohmann::json::object();
  auto put = [&](const std::string& k, const Real& v) { values[k] = audit::fmt(v, 10, cfg.precision); };
  if (cfg.chain == "matveev") {
    put("C", bounds::matveev_constant(cfg.t, cfg.D));
  } else if (cfg.chain == "lmn") {
    bounds::TwoLogSpec s;
    s.D = cfg.D;
    s.log_A1 = dec(cfg.log_a1);
    s.log_A2 = dec(cfg.log_a2);
    s.b1 = parse_integer_literal(cfg.b1);
    s.b2 = parse_integer_literal(cfg.b2);
    const auto b = bounds::lmn_two_log_bound(s);
    put("b_prime", b.b_prime);
    values["branch"] = b.branch;
    put("max_term", b.max_term);
    put("bound", b.bound);
    put("bound_D2", b.bound_d2);
  } else if (cfg.chain == "gl") {
    put("bound", bounds::gl_lemma_bound(static_cast<int>(cfg.s), dec(cfg.T)));
  } else if (cfg.chain == "av") {
    const auto b = bounds::av_count_bound(cfg.s, cfg.r);
    values["base"] = b.base;
    values["exponent"] = to_decimal(b.exponent);
    values["log10"] = b.log10_value;
    values["log10_of_2x"] = b.log10_paper_figure;
    if (b.value && b.log10_value < 1000) values["value"] = to_decimal(*b.value);
  } else {
    throw DomainError("unknown audit chain '" + cfg.chain + "' (k1, absolute, matveev, lmn, gl, av)");
  }
  if (json) {
    out << detail::envelope(cfg, nlohmann::json::array(), values, detail::since(t0)).dump(2) << "\n";
  } else {
    for (const auto& [k, v] : values.items()) out << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return kOk;
}

// ---- cf, zp, fib --------------------------------------------------------------

inline int cmd_cf(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (!cfg.terms && !cfg.M) throw DomainError("cf needs --terms or -M");
  const auto x = cfg.golden ? cf::golden_ratio(cfg.precision) : cf::tau_alpha_sqrt5(cfg.precision);
  const bool json = cfg.format == "json" || cfg.json;
  const auto t0 = std::chrono::steady_clock::now();
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json records = nlohmann::json::array();
  std::ostringstream text;
  text << "x " << (cfg.golden ? "golden" : "tau") << "\n";
  auto emit = [&](const cf::CFExpansion& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      records.push_back({{"i", i}, {"a", to_decimal(e.a[i])}, {"q", to_decimal(e.q[i])}});
    }
    if (cfg.dump) e.dump(text);
  };
  if (cfg.terms) {
    if (*cfg.terms < 1) throw DomainError("--terms must be >= 1");
    const auto e = cf::cf_expand(x, *cfg.terms, cfg.precision > kDefaultPrecision ? cfg.precision : 0);
    const auto mq = e.max_quotient(e.size() - 1);
    counts["terms"] = e.size();
    counts["max_quotient"] = to_decimal(mq);
    counts["precision"] = e.precision;
    text << "terms " << e.size() << "\nprecision " << e.precision << "\nmax_quotient " << mq << "\na";
    for (const auto& a : e.a) text << " " << a;
    text << "\n";
    emit(e);
  }
  if (cfg.M) {
    const Nat M = detail::parse_nat(*cfg.M, "M");
    const auto red = cf::legendre_reduce(x, M);
    counts["M"] = to_decimal(M);
    counts["N"] = red.N;
    counts["a_M"] = to_decimal(red.a_M);
    counts["coefficient"] = "1/" + to_decimal(red.denominator);
    counts["N_fib"] = red.N_fib;
    counts["a_M_fib"] = to_decimal(red.a_M_fib);
    counts["coefficient_fib"] = "1/" + to_decimal(red.denominator_fib);
    text << "M " << M << "\n"
         << "N " << red.N << " (minimal, q_N > M)  a(M) " << red.a_M << "  coefficient 1/" << red.denominator << "\n"
         << "N_fib " << red.N_fib << " (F_N > M)  a(M) " << red.a_M_fib << "  coefficient 1/" << red.denominator_fib
         << "\n";
    if (!cfg.terms) emit(red.expansion);
  }
  if (json) {
    out << detail::envelope(cfg, records, counts, detail::since(t0)).dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

inline int cmd_zp(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.p.empty()) throw DomainError("zp needs -p");
  const auto ep = entry_point(detail::parse_nat(cfg.p, "p"));
  if (cfg.format == "json" || cfg.json) {
    out << detail::envelope(cfg, nlohmann::json::array(),
                            {{"p", to_decimal(ep.p)}, {"z", ep.z}, {"e_p", ep.e_p}}, 0.0)
               .dump(2)
        << "\n";
  } else {
    out << "p " << ep.p << "\nz " << ep.z << "\ne_p " << ep.e_p << "\n";
  }
  return kOk;
}

inline int cmd_fib(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Nat v = cfg.lucas ? lucas(cfg.n) : fib(cfg.n);
  if (cfg.format == "json" || cfg.json) {
    out << detail::envelope(cfg, nlohmann::json::array(),
                            {{"n", cfg.n}, {cfg.lucas ? "L_n" : "F_n", to_decimal(v)}}, 0.0)
               .dump(2)
        << "\n";
  } else {
    out << v << "\n";
  }
  return kOk;
}

// ---- verify-paper -------------------------------------------------------------

inline int cmd_verify_paper(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool json = cfg.json || cfg.format == "json";
  bool ok = true;
  nlohmann::json j{{"command", "verify-paper"}, {"config", {{"fast", cfg.fast}, {"jobs", cfg.jobs}}}};
  if (!cfg.properties.empty()) {
    j["properties"] = nlohmann::json::array();
    for (const auto& name : cfg.properties) {
      const auto p = verify::run_property(name);
      ok = ok && p.ok;
      j["properties"].push_back({{"name", p.name}, {"ok", p.ok}, {"checked", p.checked},
                                 {"failures", p.failures}, {"elapsed_s", p.elapsed_s}});
      if (!json) {
        out << "[" << (p.ok ? "PASS" : "FAIL") << "] " << name << " (" << p.checked << " cases, " << p.elapsed_s
            << " s)\n";
        for (const auto& f : p.failures) out << "    " << f << "\n";
      }
    }
  } else {
    verify::Suite suite({cfg.fast, cfg.jobs});
    std::vector<int> ids = cfg.criteria;
    if (ids.empty()) {
      for (int i = 1; i <= verify::kCriteria; ++i) ids.push_back(i);
    }
    j["criteria"] = nlohmann::json::array();
    for (int id : ids) {
      err << "criterion " << id << "...\n";
      const auto r = suite.run(id);
      ok = ok && r.ok();
      j["criteria"].push_back(verify::to_json(r));
      if (!json) verify::print(out, r);
    }
  }
  j["all_pass"] = ok;
  if (json) out << j.dump(2) << "\n";
  return ok ? kOk : kChecksFailed;
}

// ---- parsing --------------------------------------------------------------------

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "search") return cmd_search(cfg, out, err);
  if (cfg.command == "count") return cmd_count(cfg, out, err);
  if (cfg.command == "scan") return cmd_scan(cfg, out, err);
  if (cfg.command == "audit") return cmd_audit(cfg, out, err);
  if (cfg.command == "cf") return cmd_cf(cfg, out, err);
  if (cfg.command == "zp") return cmd_zp(cfg, out, err);
  if (cfg.command == "fib") return cmd_fib(cfg, out, err);
  if (cfg.command == "verify-paper") return cmd_verify_paper(cfg, out, err);
  throw DomainError("unknown command '" + cfg.command + "'");
}

/// Parses argv (argv[0] is the program name) and runs the command.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fibonacci-minus-prime-power representation tools", "pillai"};
  app.require_subcommand(1);
  std::optional<unsigned> jobs;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sc->add_option("--precision", cfg.precision, "working precision in bits");
    sc->add_option("--jobs", jobs, "worker threads (default: hardware threads)");
    sc->add_flag("--json", cfg.json, "same as --format json");
  };

  auto* search = app.add_subcommand("search", "solve F_k2 - F_k3 = p^l2 - p^l3");
  common(search);
  search->add_option("--mode", cfg.mode, "l3zero or l3pos")->check(CLI::IsMember({"l3zero", "l3pos"}));
  search->add_option("--kmax", cfg.k_max, "largest index")->required();
  search->add_option("--pmin", cfg.p_min, "2 or 5 (l3zero)")->check(CLI::IsMember({2, 5}));
  search->add_option("--checkpoint", cfg.checkpoint, "checkpoint file; resumes when present");
  search->add_flag("--extend", cfg.extend, "also look for k1 > k2 extending each l3zero record");
  search->add_flag("!--no-stream", cfg.stream, "do not echo records to stderr as found");

  auto* count = app.add_subcommand("count", "representations of c as F_k - p^l");
  common(count);
  count->add_option("-p", cfg.p, "prime")->required();
  count->add_option("-c", cfg.c, "integer")->required()->allow_extra_args(false);
  count->add_option("--kmax", cfg.k_max, "largest index (default 1000)");

  auto* scan = app.add_subcommand("scan", "largest multiplicity over primes p <= pmax");
  common(scan);
  scan->add_option("--pmax", cfg.p_max, "largest prime");
  scan->add_option("--pmin", cfg.p_min, "smallest prime");
  scan->add_option("--kmax", cfg.k_max, "largest index (default 300)");
  scan->add_option("--threshold", cfg.threshold, "list values of c with at least this many representations");

  auto* aud = app.add_subcommand("audit", "re-derive a bound chain or evaluate a bound");
  common(aud);
  aud->add_option("chain", cfg.chain, "k1, absolute, matveev, lmn, gl or av")->required();
  aud->add_option("-p", cfg.p, "prime for the k1 chain (default 5)");
  aud->add_option("-s", cfg.s, "s for gl and av");
  aud->add_option("-r", cfg.r, "r for av");
  aud->add_option("-t", cfg.t, "number of logarithms (matveev)");
  aud->add_option("-D", cfg.D, "degree (matveev, lmn)");
  aud->add_option("-T", cfg.T, "T for gl");
  aud->add_option("--logA1", cfg.log_a1, "log A1 (lmn)");
  aud->add_option("--logA2", cfg.log_a2, "log A2 (lmn)");
  aud->add_option("--b1", cfg.b1, "b1 (lmn)");
  aud->add_option("--b2", cfg.b2, "b2 (lmn)");

  auto* cfc = app.add_subcommand("cf", "continued fraction and Legendre reduction");
  common(cfc);
  cfc->add_option("--terms", cfg.terms, "number of partial quotients");
  cfc->add_option("-M", cfg.M, "reduction bound, e.g. 1e35");
  cfc->add_flag("--tau", "log(alpha)/log(sqrt5) (default)");
  cfc->add_flag("--golden", cfg.golden, "the golden ratio");
  cfc->add_flag("--dump", cfg.dump, "print `i a_i q_i` lines");

  auto* zp = app.add_subcommand("zp", "entry point z(p) and e_p");
  common(zp);
  zp->add_option("-p", cfg.p, "prime")->required();

  auto* fibc = app.add_subcommand("fib", "F_n (or L_n)");
  common(fibc);
  fibc->add_option("-n", cfg.n, "index")->required();
  fibc->add_flag("--lucas", cfg.lucas, "Lucas number instead");

  auto* ver = app.add_subcommand("verify-paper", "run the acceptance suite");
  common(ver);
  ver->add_flag("--fast", cfg.fast, "skip the two k <= 1000 searches");
  ver->add_option("--criterion", cfg.criteria, "run only these criteria")->check(CLI::Range(1, verify::kCriteria));
  ver->add_option("--property", cfg.properties, "run only these property suites");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  for (auto* sc : app.get_subcommands()) cfg.command = sc->get_name();
  cfg.jobs = jobs.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (cfg.json) cfg.format = "json";

  try {
    cfg.validate();
    return dispatch(cfg, out, err);
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kPrecision;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pillai::cli

#endif  // PILLAI_CLI_HPP
