#ifndef PILLAI_SEARCH_HPP
#define PILLAI_SEARCH_HPP

// Exhaustive searches for F_k2 - F_k3 = p^l2 - p^l3, representation counts
// m(c) = #{(k, l) : c = F_k - p^l}, and multiplicity scans over windows.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pillai/certified_real.hpp"
#include "pillai/checkpoint.hpp"
#include "pillai/errors.hpp"
#include "pillai/fib.hpp"
#include "pillai/primality.hpp"
#include "pillai/roots.hpp"
#include "pillai/search_record.hpp"

namespace pillai::search {

struct Representation {
  FibIndex k = 0;
  unsigned long ell = 0;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.k == b.k && a.ell == b.ell;
  }
};

/// Searches refuse indices above 2000 unless the window is widened.
inline constexpr FibWindow kSearchWindow{2000};

struct SearchOptions {
  unsigned jobs = 1;  // 0: one per hardware thread
  std::optional<std::filesystem::path> checkpoint;
  // Called once per record as shards finish (completion order, serialised).
  std::function<void(const SearchRecord&)> on_record;
  // Test hook: stop scheduling after this many shards, leaving the report
  // incomplete, as if the process had been interrupted.
  std::optional<std::size_t> stop_after_shards;
  FibWindow window = kSearchWindow;
};

struct SearchReport {
  std::string mode;
  FibIndex k_max = 0;
  unsigned long p_min = 0;
  std::vector<SearchRecord> records;  // sorted by record_less
  std::map<std::string, std::size_t> counts;
  std::string domain;
  double elapsed_s = 0;
  bool complete = true;
  std::size_t shards_total = 0;
  std::size_t shards_done = 0;
  std::size_t shards_resumed = 0;
  std::vector<std::string> notes;
};

namespace detail {

using ShardFn = std::function<std::vector<SearchRecord>(FibIndex k2)>;

struct ShardRun {
  std::vector<SearchRecord> records;  // sorted
  std::size_t shards_total = 0;
  std::size_t shards_done = 0;
  std::size_t shards_resumed = 0;
  bool complete = true;
};

// One shard per k2 in [first, last]. Workers pull shards from a shared
// counter, largest k2 first (the most expensive ones). The merge sorts, so
// the result does not depend on scheduling.
inline ShardRun run_shards(FibIndex first, FibIndex last, const ShardFn& shard,
                           const SearchOptions& opts, const std::string& signature) {
  ShardRun run;
  CheckpointState state;
  state.signature = signature;
  if (opts.checkpoint && std::filesystem::exists(*opts.checkpoint)) {
    state = read_checkpoint(*opts.checkpoint, signature);
  }
  run.shards_resumed = state.shards.size();

  std::vector<FibIndex> todo;
  for (FibIndex k2 = last; k2 >= first && k2 != 0; --k2) {
    if (!state.shards.count(k2)) todo.push_back(k2);
  }
  run.shards_total = last >= first ? last - first + 1 : 0;

  std::size_t budget = todo.size();
  if (opts.stop_after_shards) budget = std::min(budget, *opts.stop_after_shards);

  unsigned jobs = opts.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(budget, 1)));

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= budget) return;
      std::vector<SearchRecord> recs;
      try {
        recs = shard(todo[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = budget;
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      if (failure) return;
      if (opts.on_record) {
        for (const auto& r : recs) opts.on_record(r);
      }
      state.shards[todo[i]] = std::move(recs);
      if (opts.checkpoint) {
        try {
          write_checkpoint(*opts.checkpoint, state);
        } catch (...) {
          failure = std::current_exception();
          next = budget;
          return;
        }
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  run.shards_done = state.shards.size();
  run.complete = run.shards_done == run.shards_total;
  run.records = state.sorted_records();
  return run;
}

inline std::string signature(const std::string& mode, FibIndex k_max, unsigned long p_min) {
  return "mode=" + mode + " kmax=" + std::to_string(k_max) + " pmin=" + std::to_string(p_min);
}

// Recomputes F_k2 - F_k3 = p^l2 - p^l3 with fast doubling, independently of
// the table the search used, and re-tests primality.
inline void verify_record(const SearchRecord& r, const FibWindow& window) {
  const bool shape = r.k3 >= 2 && r.k3 < r.k2 && r.l3 < r.l2;
  if (!shape || fib(r.k2, window) - fib(r.k3, window) != power(r.p, r.l2) - power(r.p, r.l3) ||
      !is_prime(r.p)) {
    throw IntegrityError("record failed re-verification: " + to_csv_row(r));
  }
}

inline void finish(SearchReport& report, ShardRun&& run,
                   std::chrono::steady_clock::time_point start) {
  report.complete = run.complete;
  report.shards_total = run.shards_total;
  report.shards_done = run.shards_done;
  report.shards_resumed = run.shards_resumed;
  if (!run.complete) report.notes.push_back("incomplete: stopped before all shards ran");
  report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Search with l3 = 0: F_k2 - F_k3 + 1 = p^l2, 2 <= k3 < k2 <= k_max.
///
/// Shards keep every prime p >= 2 so that counts for both readings of the
/// p >= 5 restriction come out of one run; `records` holds p >= p_min.
inline SearchReport search_l3_zero(FibIndex k_max, unsigned long p_min,
                                   const SearchOptions& opts = {}) {
  if (k_max < 3) throw DomainError("search_l3_zero needs k_max >= 3");
  if (p_min != 2 && p_min != 5) throw DomainError("p_min must be 2 or 5");
  opts.window.check(k_max);
  const auto start = std::chrono::steady_clock::now();
  const auto F = fib_table(k_max, opts.window);

  detail::ShardFn shard = [&F](FibIndex k2) {
    std::vector<SearchRecord> out;
    Nat v;
    for (FibIndex k3 = 2; k3 < k2; ++k3) {
      v = F[k2] - F[k3] + 1;
      if (is_prime(v)) {
        out.push_back({k2, k3, v, 1, 0});
      } else if (auto pp = composite_prime_power(v)) {
        out.push_back({k2, k3, pp->prime, pp->exponent, 0});
      }
    }
    return out;
  };
  // The checkpoint holds all-p shards, so its signature omits p_min.
  auto run = detail::run_shards(3, k_max, shard, opts, detail::signature("l3zero", k_max, 2));

  SearchReport report;
  report.mode = "l3zero";
  report.k_max = k_max;
  report.p_min = p_min;
  report.domain = "2 <= k3 < k2 <= " + std::to_string(k_max) + ", p prime >= " +
                  std::to_string(p_min) + ", l2 >= 1, l3 = 0";

  std::set<Nat> distinct_all;
  std::set<Nat> distinct_l1_all;
  std::set<Nat> distinct_l1_p5;
  std::size_t l1_all = 0;
  std::size_t l1_p5 = 0;
  std::size_t l1_small = 0;
  std::size_t probable = 0;
  for (const auto& r : run.records) {
    detail::verify_record(r, opts.window);
    distinct_all.insert(r.p);
    if (r.l2 == 1) {
      ++l1_all;
      distinct_l1_all.insert(r.p);
      if (r.p >= 5) {
        ++l1_p5;
        distinct_l1_p5.insert(r.p);
      } else {
        ++l1_small;
      }
    }
    if (r.p < p_min) continue;
    if (primality(r.p).certainty != Certainty::kDeterministic) ++probable;
    report.records.push_back(r);
  }
  std::size_t l2_gt1 = 0;
  std::size_t l2_gt1_p5 = 0;
  for (const auto& r : report.records) {
    l2_gt1 += r.l2 > 1 ? 1 : 0;
    l2_gt1_p5 += r.l2 > 1 && r.p >= 5 ? 1 : 0;
  }
  auto& c = report.counts;
  c["records"] = report.records.size();
  c["l2=1"] = report.records.size() - l2_gt1;
  c["l2>1"] = l2_gt1;
  c["probable_primes"] = probable;
  c["all_p.l2=1.tuples"] = l1_all;
  c["all_p.l2=1.distinct_primes"] = distinct_l1_all.size();
  c["all_p.distinct_primes"] = distinct_all.size();
  c["p>=5.l2=1.tuples"] = l1_p5;
  c["p>=5.l2=1.distinct_primes"] = distinct_l1_p5.size();
  c["p<5.l2=1.tuples"] = l1_small;
  // l2 = 1 over every prime plus the p >= 5 records with l2 > 1
  c["base_set"] = l1_all + l2_gt1_p5;
  detail::finish(report, std::move(run), start);
  return report;
}

/// Search with l3 >= 1 (p >= 5): for each pair and each l2 >= 2 the only
/// candidate is p = 1 + floor(D^(1/l2)), D = F_k2 - F_k3, since
/// (p-1)^l2 <= p^(l2-1)(p-1) <= D < p^l2. l3 is the exact p-adic valuation of
/// p^l2 - D.
inline SearchReport search_l3_positive(FibIndex k_max, const SearchOptions& opts = {}) {
  if (k_max < 3) throw DomainError("search_l3_positive needs k_max >= 3");
  opts.window.check(k_max);
  const auto start = std::chrono::steady_clock::now();
  const auto F = fib_table(k_max, opts.window);

  detail::ShardFn shard = [&F](FibIndex k2) {
    std::vector<SearchRecord> out;
    Nat d;
    Nat r;
    Nat p;
    Nat w;
    for (FibIndex k3 = 2; k3 < k2; ++k3) {
      d = F[k2] - F[k3];
      if (d < 4) continue;
      long exp2 = 0;
      const long double mant = mpz_get_d_2exp(&exp2, d.get_mpz_t());
      const long double log2d = std::log2(static_cast<long double>(mant)) + exp2;
      const auto bits = static_cast<unsigned long>(mpz_sizeinbase(d.get_mpz_t(), 2));
      // p >= 5 and D >= p^l2 (1 - 1/p) >= 4^l2 bound l2 by log_4 D.
      for (unsigned long l2 = 2; 2 * l2 <= bits; ++l2) {
        const long double y = log2d / l2;
        bool have_root = false;
        if (y < 24) {  // x below 2^24 is known to ~1e-9 absolute
          const long double x = std::exp2(y);
          const long double fl = std::floor(x);
          const long double frac = x - fl;
          if (frac > 1e-6L && frac < 1 - 1e-6L) {
            if (fl < 4) break;  // roots only shrink as l2 grows
            // D >= p^l2 (1 - 1/p) puts D^(1/l2) within 1.25/l2 below p.
            if (frac < 1 - 1.25L / l2 - 1e-6L) continue;
            r = static_cast<unsigned long>(fl);
            have_root = true;
          }
        }
        if (!have_root) {
          r = integer_nth_root(d, l2);
          if (r < 4) break;
        }
        p = r + 1;
        if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) continue;
        if (!is_prime(p)) continue;
        w = power(p, l2) - d;
        if (w <= 0) continue;
        unsigned long l3 = 0;
        if (is_power_of(w, p, &l3) && l3 >= 1) out.push_back({k2, k3, p, l2, l3});
      }
    }
    return out;
  };
  auto run = detail::run_shards(3, k_max, shard, opts, detail::signature("l3pos", k_max, 5));

  SearchReport report;
  report.mode = "l3pos";
  report.k_max = k_max;
  report.p_min = 5;
  report.domain = "2 <= k3 < k2 <= " + std::to_string(k_max) + ", p prime >= 5, l2 > l3 >= 1";
  for (const auto& r : run.records) {
    detail::verify_record(r, opts.window);
    report.records.push_back(r);
  }
  report.counts["records"] = report.records.size();
  detail::finish(report, std::move(run), start);
  return report;
}

/// All k1 in [k2+1, k_max] with F_k1 - F_k3 + 1 = p^l1, l1 >= 1, for a base
/// record from search_l3_zero. Pass `table` (F_0..F_k_max) to avoid
/// recomputing it for many bases.
inline std::vector<Representation> extend_to_k1(const SearchRecord& base, FibIndex k_max,
                                                 const std::vector<Nat>* table = nullptr,
                                                 const FibWindow& window = kSearchWindow) {
  if (base.l3 != 0) throw DomainError("extend_to_k1 needs a base with l3 = 0");
  std::vector<Nat> own;
  if (!table || table->size() <= k_max) {
    own = fib_table(k_max, window);
    table = &own;
  }
  std::vector<Representation> out;
  Nat w;
  for (FibIndex k1 = base.k2 + 1; k1 <= k_max; ++k1) {
    w = (*table)[k1] - (*table)[base.k3] + 1;
    unsigned long e = 0;
    if (is_power_of(w, base.p, &e) && e >= 1) out.push_back({k1, e});
  }
  return out;
}

/// All (k, l) with 2 <= k <= k_max, l >= 0, F_k - c = p^l, by decreasing l
/// (hence decreasing k, as F is increasing from index 2 on).
inline std::vector<Representation> count_representations(const Nat& p, const Int& c,
                                                          FibIndex k_max,
                                                          const FibWindow& window = kSearchWindow) {
  if (k_max < 2) throw DomainError("count_representations needs k_max >= 2");
  if (!is_prime(p)) throw DomainError("p must be prime");
  const auto F = fib_table(k_max, window);
  std::vector<Representation> out;
  Nat w;
  for (FibIndex k = 2; k <= k_max; ++k) {
    w = F[k] - c;
    unsigned long e = 0;
    if (w >= 1 && is_power_of(w, p, &e)) out.push_back({k, e});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ell > b.ell; });
  return out;
}

struct TwoRepPrimes {
  std::vector<SearchRecord> tuples;  // (k1, k2, p) stored as (k2, k3, p, 1, 0)
  std::size_t tuple_count = 0;
  std::size_t distinct_primes = 0;
  std::size_t tuple_count_p5 = 0;
  std::size_t distinct_primes_p5 = 0;
};

/// Pairs 2 <= k2 < k1 <= k_max with F_k1 - F_k2 + 1 prime.
inline TwoRepPrimes two_rep_prime_enum(FibIndex k_max, const SearchOptions& opts = {}) {
  if (k_max < 3) return {};
  const auto rep = search_l3_zero(k_max, 2, opts);
  TwoRepPrimes out;
  std::set<Nat> all;
  std::set<Nat> p5;
  for (const auto& r : rep.records) {
    if (r.l2 != 1) continue;
    out.tuples.push_back(r);
    all.insert(r.p);
    if (r.p >= 5) {
      ++out.tuple_count_p5;
      p5.insert(r.p);
    }
  }
  out.tuple_count = out.tuples.size();
  out.distinct_primes = all.size();
  out.distinct_primes_p5 = p5.size();
  return out;
}

/// k log(alpha) - l log(p).
inline CertifiedReal lemma1_interval(FibIndex k, unsigned long ell, const Nat& p) {
  if (k < 2) throw DomainError("lemma1_interval needs k >= 2");
  return CertifiedReal([k, ell, p](mpfr_prec_t prec) {
    return Interval::from_long(k, prec) * constants::log_alpha(prec) -
           Interval::from_long(static_cast<long>(ell), prec) * log(Interval::from_int(p, prec));
  });
}

/// Whether k log(alpha) - l log(p) lies in the open interval (0.25, 2).
inline bool in_lemma1_interval(FibIndex k, unsigned long ell, const Nat& p) {
  const auto lo = Interval::from_decimal("0.25", 64);
  const auto hi = Interval::from_long(2, 64);
  auto settled = [&](const Interval& x) {
    return (x.certainly_greater(lo) && x.certainly_less(hi)) || x.certainly_less_equal(lo) ||
           hi.certainly_less_equal(x);
  };
  const auto v = lemma1_interval(k, ell, p).refine_until(settled).enclosure();
  return v.certainly_greater(lo) && v.certainly_less(hi);
}

struct MultiplicityWitness {
  Nat p;
  Int c;
  std::vector<Representation> reps;  // decreasing l
};

struct MultiplicityResult {
  std::size_t max_m = 0;
  std::map<Nat, std::size_t> max_by_p;
  std::vector<MultiplicityWitness> witnesses;  // m >= threshold, by (p, c)
  std::size_t pairs_examined = 0;
  unsigned long ell_slack = 1;
  std::string domain;
};

/// For each prime p in [p_min, p_max], groups (k, l) with 2 <= k <= k_max,
/// 0 <= l <= floor(k log(alpha)/log(p)) + 1 by c = F_k - p^l.
inline MultiplicityResult multiplicity_scan(const Nat& p_max, FibIndex k_max, const Nat& p_min = 2,
                                            std::size_t threshold = 3,
                                            const FibWindow& window = kSearchWindow) {
  if (p_max < 2 || k_max < 2) throw DomainError("multiplicity_scan needs p_max >= 2, k_max >= 2");
  if (!p_max.fits_uint_p()) throw SizeError("p_max too large for a prime sieve");
  const auto F = fib_table(k_max, window);
  MultiplicityResult out;
  out.domain = "p prime in [" + to_decimal(p_min) + ", " + to_decimal(p_max) + "], 2 <= k <= " +
               std::to_string(k_max) + ", 0 <= l <= floor(k log(alpha)/log(p)) + 1";

  for (std::uint32_t pp : primes_up_to(static_cast<std::uint32_t>(p_max.get_ui()))) {
    if (pp < p_min) continue;
    const Nat p = pp;
    const auto ratio = CertifiedReal([pp](mpfr_prec_t prec) {
      return constants::log_alpha(prec) / log(Interval::from_long(pp, prec));
    });
    std::vector<Nat> powers{1};
    std::map<Int, std::vector<Representation>> groups;
    for (FibIndex k = 2; k <= k_max; ++k) {
      const auto scaled = ratio.map([k](const Interval& x) { return x * Interval::from_long(k, x.precision()); })
                              .refine_until([](const Interval& x) {
                                auto [a, b] = x.floor_bounds();
                                return a == b;
                              });
      const unsigned long ell_max = scaled.enclosure().floor_bounds().first.get_ui() + out.ell_slack;
      while (powers.size() <= ell_max) powers.push_back(powers.back() * p);
      for (unsigned long ell = 0; ell <= ell_max; ++ell) {
        groups[F[k] - powers[ell]].push_back({k, ell});
        ++out.pairs_examined;
      }
    }
    std::size_t best = 0;
    for (auto& [c, reps] : groups) {
      best = std::max(best, reps.size());
      if (reps.size() >= threshold) {
        std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.ell > b.ell; });
        out.witnesses.push_back({p, c, reps});
      }
    }
    out.max_by_p[p] = best;
    out.max_m = std::max(out.max_m, best);
  }
  return out;
}

}  // namespace pillai::search

#endif  // PILLAI_SEARCH_HPP
