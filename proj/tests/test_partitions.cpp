#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "spbaw/partitions.hpp"

using namespace spbaw;

namespace {

// Hook lengths from the Young diagram.
std::vector<int> hook_lengths(const Partition& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      out.push_back(p[i] - j - 1 + leg + 1);
    }
  }
  return out;
}

// Partition counts p(0..m) by the standard recurrence over largest part.
std::vector<long long> partition_counts(int m) {
  std::vector<long long> c(m + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (int s = part; s <= m; ++s) c[s] += c[s - part];
  }
  return c;
}

// Number of k-tuples of partitions of total size w: coefficient of t^w in P(t)^k.
long long tuple_count(int k, int w) {
  const auto p = partition_counts(w);
  std::vector<long long> acc(w + 1, 0);
  acc[0] = 1;
  for (int r = 0; r < k; ++r) {
    std::vector<long long> next(w + 1, 0);
    for (int a = 0; a <= w; ++a) {
      for (int b = 0; a + b <= w; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = next;
  }
  return acc[w];
}

// Abacus with an explicit beta-set length.
struct Abacus {
  Partition core;
  EQuotient quotient;
};

Abacus abacus(const Partition& p, int e, int len) {
  std::vector<std::vector<int>> runners(e);
  for (std::size_t i = 0; i < static_cast<std::size_t>(len); ++i) {
    const int part = i < p.size() ? p[i] : 0;
    const int b = part + len - 1 - static_cast<int>(i);
    runners[b % e].push_back(b / e);
  }
  Abacus out;
  out.quotient.resize(e);
  BetaSet core_beta;
  for (int r = 0; r < e; ++r) {
    auto& pos = runners[r];
    std::sort(pos.begin(), pos.end(), std::greater<>());
    const int m = static_cast<int>(pos.size());
    Partition q;
    for (int k = 0; k < m; ++k) {
      if (pos[k] - (m - 1 - k) > 0) q.push_back(pos[k] - (m - 1 - k));
    }
    out.quotient[r] = q;
    for (int k = 0; k < m; ++k) core_beta.push_back(r + e * k);
  }
  std::sort(core_beta.begin(), core_beta.end(), std::greater<>());
  out.core = partition_of(core_beta);
  return out;
}

}  // namespace

TEST(Partitions, BetaSetExamples) {
  EXPECT_EQ(beta_set({3, 1}, 3), (BetaSet{5, 2, 0}));
  EXPECT_EQ(beta_set({}, 2), (BetaSet{1, 0}));
  EXPECT_THROW(beta_set({2, 1, 1}, 2), std::invalid_argument);
  EXPECT_EQ(partition_of({5, 2, 0}), (Partition{3, 1}));
  EXPECT_EQ(partition_of({2, 1, 0}), Partition{});
}

TEST(Partitions, CoreQuotientExamples) {
  const auto cq = e_core_quotient({4}, 2);
  EXPECT_EQ(cq.core, Partition{});
  EXPECT_EQ(cq.quotient, (EQuotient{{}, {2}}));

  const auto cq2 = e_core_quotient({2, 1}, 2);
  EXPECT_EQ(cq2.core, (Partition{2, 1}));
  EXPECT_EQ(cq2.quotient, (EQuotient{{}, {}}));

  EXPECT_TRUE(is_e_core({3, 1}, 3));
  const auto cq3 = e_core_quotient({3, 1}, 2);
  EXPECT_EQ(cq3.core, Partition{});
  EXPECT_EQ(tuple_size(cq3.quotient), 2);
}

TEST(Partitions, CoreDetectionMatchesHookLengths) {
  for (int m = 0; m <= 12; ++m) {
    for (const auto& p : enumerate_partitions(m)) {
      const auto hooks = hook_lengths(p);
      for (int e = 1; e <= 5; ++e) {
        const long long divisible = std::count_if(hooks.begin(), hooks.end(), [e](int h) { return h % e == 0; });
        EXPECT_EQ(is_e_core(p, e), divisible == 0);
        const auto cq = e_core_quotient(p, e);
        EXPECT_EQ(tuple_size(cq.quotient), divisible);
        EXPECT_EQ(size(cq.core) + e * tuple_size(cq.quotient), m);
        EXPECT_TRUE(is_e_core(cq.core, e));
      }
    }
  }
}

TEST(Partitions, QuotientMatchesExplicitAbacus) {
  for (int m = 0; m <= 10; ++m) {
    for (const auto& p : enumerate_partitions(m)) {
      for (int e = 2; e <= 4; ++e) {
        const int len = (static_cast<int>(p.size()) + e - 1) / e * e;
        const auto cq = e_core_quotient(p, e);
        const auto a = abacus(p, e, len);
        EXPECT_EQ(cq.core, a.core);
        EXPECT_EQ(cq.quotient, a.quotient);
        // Adding a full row of e beads changes nothing.
        const auto b = abacus(p, e, len + e);
        EXPECT_EQ(b.core, a.core);
        EXPECT_EQ(b.quotient, a.quotient);
      }
    }
  }
}

TEST(Partitions, RandomRoundTrips) {
  std::mt19937_64 rng(7);
  std::vector<std::vector<Partition>> by_size;
  for (int m = 0; m <= 20; ++m) by_size.push_back(enumerate_partitions(m));
  std::uniform_int_distribution<int> msize(0, 20), esize(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& pool = by_size[msize(rng)];
    const auto& p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int e = esize(rng);
    const auto cq = e_core_quotient(p, e);
    EXPECT_EQ(from_core_quotient(cq.core, cq.quotient), p);
  }
}

TEST(Partitions, FromCoreQuotientRejectsNonCore) {
  EXPECT_THROW(from_core_quotient({2}, EQuotient{{}, {}}), std::invalid_argument);
}

TEST(Partitions, CountsPerCoreMatchMultipartitions) {
  for (int e = 1; e <= 4; ++e) {
    for (int m = 0; m <= 12; ++m) {
      std::map<Partition, long long> per_core;
      for (const auto& p : enumerate_partitions(m)) ++per_core[e_core_quotient(p, e).core];
      for (const auto& [core, count] : per_core) {
        EXPECT_EQ(count, tuple_count(e, (m - size(core)) / e)) << "e=" << e << " m=" << m;
      }
    }
  }
}

TEST(Partitions, EnumerationOrderAndCounts) {
  EXPECT_EQ(enumerate_partitions(4),
            (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(0), (std::vector<Partition>{{}}));
  const auto pc = partition_counts(20);
  for (int m = 0; m <= 20; ++m) {
    const auto list = enumerate_partitions(m);
    EXPECT_EQ(static_cast<long long>(list.size()), pc[m]);
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), std::greater<>()));
    for (const auto& p : list) {
      EXPECT_TRUE(is_partition(p));
      EXPECT_EQ(size(p), m);
    }
  }
}

TEST(Partitions, ECores) {
  EXPECT_EQ(enumerate_e_cores(2, 6), (std::vector<Partition>{{}, {1}, {2, 1}, {3, 2, 1}}));
  for (int e = 2; e <= 4; ++e) {
    std::set<Partition> brute;
    for (int m = 0; m <= 10; ++m) {
      for (const auto& p : enumerate_partitions(m)) {
        if (is_e_core(p, e)) brute.insert(p);
      }
    }
    const auto list = enumerate_e_cores(e, 10);
    EXPECT_EQ(std::set<Partition>(list.begin(), list.end()), brute);
    EXPECT_EQ(list.size(), brute.size());
  }
}

TEST(Partitions, TupleEnumeration) {
  EXPECT_EQ(enumerate_tuples(2, 1), (std::vector<std::vector<Partition>>{{{1}, {}}, {{}, {1}}}));
  EXPECT_EQ(enumerate_tuples(3, 0), (std::vector<std::vector<Partition>>{{{}, {}, {}}}));
  for (int k = 1; k <= 4; ++k) {
    for (int w = 0; w <= 6; ++w) {
      const auto list = enumerate_tuples(k, w);
      EXPECT_EQ(static_cast<long long>(list.size()), tuple_count(k, w));
      std::set<std::vector<Partition>> distinct(list.begin(), list.end());
      EXPECT_EQ(distinct.size(), list.size());
      int prev = w;
      for (const auto& t : list) {
        EXPECT_EQ(static_cast<int>(t.size()), k);
        EXPECT_EQ(tuple_size(t), w);
        EXPECT_LE(size(t[0]), prev);
        prev = size(t[0]);
      }
    }
  }
}

TEST(CoreTowers, Examples) {
  EXPECT_TRUE(core_tower({}, 3).levels.empty());
  EXPECT_EQ(core_tower({1}, 3).levels, (std::vector<std::vector<Partition>>{{{1}}}));
  const auto t = core_tower({3}, 3);
  EXPECT_EQ(t.levels, (std::vector<std::vector<Partition>>{{{}}, {{}, {}, {1}}}));
  EXPECT_EQ(tower_weight(t, 3), 3);
  EXPECT_EQ(tower_to_partition(t, 3), (Partition{3}));
}

TEST(CoreTowers, RoundTripsAndWeights) {
  for (int ell : {3, 5}) {
    for (int m = 0; m <= 14; ++m) {
      for (const auto& p : enumerate_partitions(m)) {
        const auto t = core_tower(p, ell);
        EXPECT_EQ(tower_weight(t, ell), m);
        EXPECT_EQ(tower_to_partition(t, ell), p);
        for (std::size_t d = 0; d < t.levels.size(); ++d) {
          for (const auto& c : t.levels[d]) EXPECT_TRUE(is_e_core(c, ell));
        }
      }
    }
  }
}

TEST(CoreTowers, EnumerationIsBijectiveWithPartitions) {
  for (int ell : {3, 5, 7}) {
    for (int w = 0; w <= 12; ++w) {
      const auto towers = enumerate_towers(ell, w);
      std::set<Partition> images;
      for (const auto& t : towers) {
        EXPECT_EQ(tower_weight(t, ell), w);
        EXPECT_EQ(core_tower(tower_to_partition(t, ell), ell), t);
        images.insert(tower_to_partition(t, ell));
      }
      EXPECT_EQ(towers.size(), enumerate_partitions(w).size());
      EXPECT_EQ(images.size(), towers.size());
    }
  }
}

TEST(CoreTowers, RejectsMalformedLevels) {
  CoreTower bad;
  bad.levels = {{{}, {}}};
  EXPECT_THROW(tower_to_partition(bad, 3), std::invalid_argument);
  CoreTower noncore;
  noncore.levels = {{{3}}};
  EXPECT_THROW(tower_to_partition(noncore, 3), std::invalid_argument);
}
