#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "pillai/checkpoint.hpp"
#include "pillai/search.hpp"

namespace pillai::search {
namespace {

std::vector<std::uint64_t> small_fib(unsigned n) {
  std::vector<std::uint64_t> f{0, 1};
  while (f.size() <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// Naive oracle: every prime p <= F_k2 and every exponent, in machine words.
std::vector<SearchRecord> brute_force(unsigned k_max, bool l3_zero, unsigned long p_min) {
  const auto f = small_fib(k_max);
  const auto primes = primes_up_to(static_cast<std::uint32_t>(f[k_max] + 1));
  std::vector<SearchRecord> out;
  for (unsigned k2 = 3; k2 <= k_max; ++k2) {
    for (unsigned k3 = 2; k3 < k2; ++k3) {
      const std::uint64_t d = f[k2] - f[k3];
      for (std::uint64_t p : primes) {
        if (p < p_min) continue;
        if (p > d + 1) break;
        std::vector<std::uint64_t> pw{1};
        while (pw.back() <= 2 * (d + 1)) pw.push_back(pw.back() * p);
        for (unsigned long l2 = 1; l2 < pw.size(); ++l2) {
          for (unsigned long l3 = 0; l3 < l2; ++l3) {
            if (l3_zero != (l3 == 0)) continue;
            if (pw[l2] - pw[l3] == d) out.push_back({k2, k3, Nat(p), l2, l3});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

TEST(SearchOracle, L3ZeroMatchesBruteForceUpTo30) {
  for (unsigned k_max : {3U, 7U, 14U, 24U, 30U}) {
    for (unsigned long p_min : {2UL, 5UL}) {
      EXPECT_EQ(search_l3_zero(k_max, p_min).records, brute_force(k_max, true, p_min))
          << k_max << " " << p_min;
    }
  }
}

TEST(SearchOracle, L3PositiveMatchesBruteForceUpTo30) {
  for (unsigned k_max : {3U, 7U, 12U, 20U, 30U}) {
    EXPECT_EQ(search_l3_positive(k_max).records, brute_force(k_max, false, 5)) << k_max;
  }
}

TEST(SearchL3Zero, SmallWindowExamples) {
  const auto rep = search_l3_zero(14, 5);
  std::vector<SearchRecord> big;
  for (const auto& r : rep.records) {
    if (r.l2 > 1) big.push_back(r);
  }
  ASSERT_EQ(big.size(), 1U);
  EXPECT_EQ(big[0], (SearchRecord{14, 11, 17, 2, 0}));
  // F_12 - F_2 + 1 = 12^2 and F_24 - F_12 + 1 = 215^2 are squares of
  // composites and must not appear.
  const auto wide = search_l3_zero(24, 2);
  for (const auto& r : wide.records) {
    EXPECT_FALSE(r.k2 == 12 && r.k3 == 2);
    EXPECT_FALSE(r.k2 == 24 && r.k3 == 12);
  }
  EXPECT_EQ(fib(12) - fib(2) + 1, Nat(144));
  EXPECT_EQ(fib(24) - fib(12) + 1, Nat(215 * 215));
}

TEST(SearchL3Zero, CountsAreConsistent) {
  const auto rep = search_l3_zero(200, 5);
  std::size_t l1 = 0;
  for (const auto& r : rep.records) l1 += r.l2 == 1;
  EXPECT_EQ(rep.counts.at("l2=1"), l1);
  EXPECT_EQ(rep.counts.at("records"), rep.records.size());
  EXPECT_EQ(rep.counts.at("l2=1") + rep.counts.at("l2>1"), rep.records.size());
  EXPECT_EQ(rep.counts.at("all_p.l2=1.tuples"),
            rep.counts.at("p>=5.l2=1.tuples") + rep.counts.at("p<5.l2=1.tuples"));
  EXPECT_EQ(rep.counts.at("p<5.l2=1.tuples"), 4U);
  EXPECT_TRUE(std::is_sorted(rep.records.begin(), rep.records.end(), record_less));
}

TEST(SearchL3Zero, Preconditions) {
  EXPECT_THROW(search_l3_zero(2, 5), DomainError);
  EXPECT_THROW(search_l3_zero(10, 3), DomainError);
  EXPECT_THROW(search_l3_zero(2001, 5), SizeError);
}

TEST(SearchL3Positive, SmokeWindowAndTinyWindow) {
  EXPECT_TRUE(search_l3_positive(7).records.empty());
  const std::vector<SearchRecord> expected{
      {8, 2, 5, 2, 1}, {10, 7, 7, 2, 1}, {12, 9, 11, 2, 1}};
  EXPECT_EQ(search_l3_positive(120).records, expected);
  // The recipe by hand for (8, 2): D = 20, 1 + floor(sqrt 20) = 5, 25 - 20 = 5.
  EXPECT_EQ(integer_nth_root(fib(8) - fib(2), 2) + 1, 5);
}

TEST(SearchParallel, JobsDoNotChangeResults) {
  SearchOptions one;
  SearchOptions four;
  four.jobs = 4;
  EXPECT_EQ(search_l3_zero(150, 2, one).records, search_l3_zero(150, 2, four).records);
  EXPECT_EQ(search_l3_positive(150, one).records, search_l3_positive(150, four).records);
}

TEST(SearchParallel, StreamsEveryRecordOnce) {
  std::vector<SearchRecord> streamed;
  SearchOptions opts;
  opts.jobs = 3;
  opts.on_record = [&](const SearchRecord& r) { streamed.push_back(r); };
  const auto rep = search_l3_zero(100, 2, opts);
  std::sort(streamed.begin(), streamed.end(), record_less);
  EXPECT_EQ(streamed, rep.records);
}

class CheckpointTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pillai_ck_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CheckpointTest, ResumeAtAnyShardBoundaryGivesSameReport) {
  const auto full = search_l3_zero(90, 5);
  for (std::size_t stop : {0UL, 1UL, 17UL, 60UL, 87UL}) {
    const auto path = dir_ / ("ck" + std::to_string(stop));
    SearchOptions first;
    first.checkpoint = path;
    first.stop_after_shards = stop;
    const auto partial = search_l3_zero(90, 5, first);
    EXPECT_EQ(partial.complete, stop >= 88);
    SearchOptions second;
    second.checkpoint = path;
    second.jobs = 2;
    const auto resumed = search_l3_zero(90, 5, second);
    EXPECT_TRUE(resumed.complete);
    EXPECT_EQ(resumed.shards_resumed, stop);
    EXPECT_EQ(resumed.records, full.records);
    EXPECT_EQ(resumed.counts, full.counts);
  }
}

TEST_F(CheckpointTest, L3PositiveResumes) {
  const auto path = dir_ / "pos";
  SearchOptions first;
  first.checkpoint = path;
  first.stop_after_shards = 50;
  search_l3_positive(100, first);
  SearchOptions second;
  second.checkpoint = path;
  EXPECT_EQ(search_l3_positive(100, second).records, search_l3_positive(100).records);
}

TEST_F(CheckpointTest, FileFormat) {
  const auto path = dir_ / "fmt";
  SearchOptions opts;
  opts.checkpoint = path;
  search_l3_zero(10, 2, opts);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# mode=l3zero kmax=10 pmin=2");
  std::size_t shards = 0;
  std::string last;
  while (std::getline(in, line)) {
    if (line.rfind("k2=", 0) == 0) {
      ++shards;
      EXPECT_NE(line.find(" done="), std::string::npos);
    }
    last = line;
  }
  EXPECT_EQ(shards, 8U);
  ASSERT_EQ(last.rfind("hash=", 0), 0U);
  EXPECT_EQ(last.size(), 5U + 16U);
}

TEST_F(CheckpointTest, TamperingIsDetected) {
  const auto path = dir_ / "tamper";
  SearchOptions opts;
  opts.checkpoint = path;
  search_l3_zero(40, 2, opts);

  // Edit one record: the hash no longer matches.
  std::string recs;
  {
    std::ifstream in(records_path(path));
    std::stringstream ss;
    ss << in.rdbuf();
    recs = ss.str();
  }
  const auto pos = recs.find("\n5,2,");
  ASSERT_NE(pos, std::string::npos);
  std::string bad = recs;
  bad.replace(pos, 5, "\n5,3,");
  std::ofstream(records_path(path), std::ios::trunc) << bad;
  EXPECT_THROW(search_l3_zero(40, 2, opts), IntegrityError);

  // A different search cannot resume this checkpoint.
  std::ofstream(records_path(path), std::ios::trunc) << recs;
  EXPECT_NO_THROW(search_l3_zero(40, 2, opts));
  EXPECT_THROW(search_l3_zero(41, 2, opts), IntegrityError);

  // Truncation removes the trailer.
  std::string ck;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    ck = ss.str();
  }
  std::ofstream(path, std::ios::trunc) << ck.substr(0, ck.find("hash="));
  EXPECT_THROW(read_checkpoint(path, "mode=l3zero kmax=40 pmin=2"), IntegrityError);
}

TEST(ExtendToK1, Examples) {
  EXPECT_TRUE(extend_to_k1({14, 11, 17, 2, 0}, 14).empty());
  const auto ext = extend_to_k1({3, 2, 2, 1, 0}, 7);
  ASSERT_EQ(ext.size(), 1U);
  EXPECT_EQ(ext[0], (Representation{6, 3}));
  EXPECT_THROW(extend_to_k1({8, 2, 5, 2, 1}, 20), DomainError);
}

TEST(CountRepresentations, Examples) {
  using R = std::vector<Representation>;
  EXPECT_EQ(count_representations(2, 0, 1000), (R{{6, 3}, {3, 1}, {2, 0}}));
  EXPECT_EQ(count_representations(2, -3, 1000), (R{{7, 4}, {5, 3}, {2, 2}}));
  EXPECT_EQ(count_representations(5, -4, 1000), (R{{8, 2}, {2, 1}}));
  EXPECT_THROW(count_representations(4, 0, 10), DomainError);
}

TEST(CountRepresentations, EllDecreasingImpliesKDecreasing) {
  std::mt19937_64 rng(4242);
  const auto primes = primes_up_to(60);
  for (int i = 0; i < 300; ++i) {
    const Nat p = primes[rng() % primes.size()];
    const Int c = static_cast<long>(rng() % 2001) - 1000;
    const auto reps = count_representations(p, c, 200);
    for (std::size_t j = 1; j < reps.size(); ++j) {
      ASSERT_GT(reps[j - 1].ell, reps[j].ell);
      ASSERT_GT(reps[j - 1].k, reps[j].k);
    }
  }
}

TEST(TwoRepPrimes, SmallWindows) {
  EXPECT_EQ(two_rep_prime_enum(2).tuple_count, 0U);
  const auto four = two_rep_prime_enum(4);
  const std::vector<SearchRecord> expected{{3, 2, 2, 1, 0}, {4, 2, 3, 1, 0}, {4, 3, 2, 1, 0}};
  EXPECT_EQ(four.tuples, expected);
  EXPECT_EQ(four.tuple_count, 3U);
  EXPECT_EQ(four.distinct_primes, 2U);
  EXPECT_EQ(four.tuple_count_p5, 0U);
}

TEST(RepresentationWindow, Examples) {
  const auto a = lemma1_interval(8, 2, 5);
  EXPECT_NEAR(a.midpoint(), 0.6308, 1e-4);
  EXPECT_TRUE(in_lemma1_interval(8, 2, 5));
  EXPECT_NEAR(lemma1_interval(2, 0, 5).midpoint(), 0.9624236501, 1e-9);
  EXPECT_TRUE(in_lemma1_interval(2, 0, 5));
  EXPECT_LT(lemma1_interval(2, 5, 5).upper(), 0);
  EXPECT_FALSE(in_lemma1_interval(2, 5, 5));
  EXPECT_LT(lemma1_interval(8, 2, 5).radius(), 1e-30);
}

TEST(MultiplicityScan, PowersOfTwo) {
  const auto res = multiplicity_scan(2, 100);
  EXPECT_EQ(res.max_m, 3U);
  std::set<Int> cs;
  for (const auto& w : res.witnesses) {
    EXPECT_EQ(w.reps.size(), 3U);
    cs.insert(w.c);
  }
  EXPECT_EQ(cs, (std::set<Int>{-3, 0, 1}));
}

TEST(MultiplicityScan, SmallOddPrimes) {
  const auto res = multiplicity_scan(11, 1000, 5, 2);
  EXPECT_EQ(res.max_m, 2U);
  // Doubles with both exponents positive are exactly the l3 >= 1 solutions.
  std::set<Int> both_positive;
  for (const auto& w : res.witnesses) {
    if (w.reps.back().ell >= 1) both_positive.insert(w.c);
  }
  EXPECT_EQ(both_positive, (std::set<Int>{-4, 6, 23}));
}

TEST(MultiplicityScan, WitnessesSatisfyWindowPredicate) {
  const auto res = multiplicity_scan(30, 200, 2, 2);
  EXPECT_LE(res.max_m, 4U);
  for (const auto& w : res.witnesses) {
    for (std::size_t i = 0; i + 1 < w.reps.size(); ++i) {
      ASSERT_TRUE(in_lemma1_interval(w.reps[i].k, w.reps[i].ell, w.p))
          << w.p.get_str() << " " << w.c.get_str() << " k=" << w.reps[i].k;
    }
  }
}

}  // namespace
}  // namespace pillai::search
