#include <gtest/gtest.h>

#include <map>
#include <set>

#include "spbaw/labels.hpp"

using namespace spbaw;

namespace {

struct Config {
  std::uint64_t p, f, ell;
  unsigned n;
};

std::string name_of(const Config& c) {
  return "p" + std::to_string(c.p) + "f" + std::to_string(c.f) + "ell" + std::to_string(c.ell) + "n" +
         std::to_string(c.n);
}

using Series = std::vector<long long>;

Series mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 / (1 - c t^d) truncated.
Series geometric(std::size_t len, int d, long long c) {
  Series out(len, 0);
  long long v = 1;
  for (std::size_t k = 0; k < len; k += d) {
    out[k] = v;
    v *= c;
  }
  return out;
}

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

long long ipow(long long q, int k) {
  long long r = 1;
  while (k-- > 0) r *= q;
  return r;
}

// Monic irreducibles of degree d over F_q.
long long irreducible_count(long long q, int d) {
  long long total = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k == 0) total += mobius(d / k) * ipow(q, k);
  }
  return total / d;
}

// Self-reciprocal monic irreducibles of even degree 2d over F_q, q odd.
long long self_reciprocal_count(long long q, int d) {
  long long total = 0;
  for (int k = 1; k <= d; k += 2) {
    if (d % k == 0) total += mobius(k) * (ipow(q, d / k) - 1);
  }
  return total / (2 * d);
}

// Non-F0 elementary divisor classes of degree 2d.
long long class_count(long long q, int d) {
  const long long self_deg_d = d == 1 ? 3 : (d % 2 == 0 ? self_reciprocal_count(q, d / 2) : 0);
  return self_reciprocal_count(q, d) + (irreducible_count(q, d) - self_deg_d) / 2;
}

// Semisimple labels of dimension 2n+1 from the generating function over classes.
long long semisimple_count(long long q, unsigned n) {
  const std::size_t len = 2 * n + 2;
  Series minus(len, 0), plus(len, 0);
  for (std::size_t k = 1; k < len; k += 2) minus[k] = 1;
  plus[0] = 1;
  for (std::size_t k = 2; k < len; k += 2) plus[k] = 2;
  Series acc = mul(minus, plus);
  for (int d = 1; 2 * d < static_cast<int>(len); ++d) {
    for (long long r = 0; r < class_count(q, d); ++r) acc = mul(acc, geometric(len, 2 * d, 1));
  }
  return acc[2 * n + 1];
}

// Irreducible characters of Sp_2n(q), q odd: coefficient of t^n in prod (1+t^i)^4 / (1 - q t^i).
long long class_number(long long q, unsigned n) {
  const std::size_t len = n + 1;
  Series acc(len, 0);
  acc[0] = 1;
  for (std::size_t i = 1; i < len; ++i) {
    Series one_plus(len, 0);
    one_plus[0] = 1;
    one_plus[i] = 1;
    for (int k = 0; k < 4; ++k) acc = mul(acc, one_plus);
    acc = mul(acc, geometric(len, static_cast<int>(i), q));
  }
  return acc[n];
}

long long tuple_count(int k, int w) {
  std::vector<long long> p(w + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= w; ++part) {
    for (int s = part; s <= w; ++s) p[s] += p[s - part];
  }
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

const std::vector<Config> kConfigs{{3, 1, 5, 1}, {5, 1, 3, 1}, {3, 1, 5, 2}, {3, 1, 7, 2},
                                   {5, 1, 3, 2}, {3, 1, 13, 2}, {3, 2, 5, 2}, {3, 2, 7, 1}};

}  // namespace

TEST(Semisimple, RankOneOverF3) {
  const auto ctx = make_context(3, 1, 5);
  const auto all = enumerate_semisimple(ctx, 1, false);
  ASSERT_EQ(all.size(), 4u);
  std::set<std::vector<std::pair<FqPoly, int>>> supports;
  for (const auto& s : all) {
    std::vector<std::pair<FqPoly, int>> sup;
    for (const auto& [c, m] : s.mult) sup.emplace_back(c.gamma(), m);
    supports.insert(sup);
  }
  const FqPoly xm1({2, 1}), xp1({1, 1}), x2p1({1, 0, 1});
  EXPECT_TRUE(supports.contains({{xm1, 3}}));
  EXPECT_TRUE(supports.contains({{xp1, 2}, {xm1, 1}}));
  EXPECT_TRUE(supports.contains({{xm1, 1}, {x2p1, 1}}));
}

TEST(Semisimple, CountsMatchGeneratingFunction) {
  for (auto [p, f, ell] : std::vector<std::tuple<int, int, int>>{{3, 1, 5}, {5, 1, 3}, {7, 1, 3}, {3, 2, 5}}) {
    const auto ctx = make_context(p, f, ell);
    for (unsigned n = 1; n <= (ctx.q > 5 ? 2u : 3u); ++n) {
      EXPECT_EQ(static_cast<long long>(enumerate_semisimple(ctx, n, false).size()),
                semisimple_count(static_cast<long long>(ctx.q), n))
          << "q=" << ctx.q << " n=" << n;
    }
  }
}

TEST(Semisimple, ClassCountsByDegree) {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const auto ctx = make_context(p, f, p == 5 ? 3 : 5);
    std::map<int, long long> by_deg;
    for (const auto& c : enumerate_classes(ctx, 4, false)) ++by_deg[c.deg()];
    EXPECT_EQ(by_deg[1], 2);
    EXPECT_EQ(by_deg[2], class_count(static_cast<long long>(ctx.q), 1));
    EXPECT_EQ(by_deg[4], class_count(static_cast<long long>(ctx.q), 2));
  }
}

TEST(Semisimple, LabelInvariants) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    const auto all = enumerate_semisimple(ctx, cfg.n, false);
    const auto ellp = enumerate_semisimple(ctx, cfg.n, true);
    EXPECT_EQ(std::set<SemisimpleLabel>(all.begin(), all.end()).size(), all.size());
    for (const auto& s : all) {
      EXPECT_EQ(s.dimension(), static_cast<int>(2 * cfg.n + 1));
      ASSERT_TRUE(s.index_minus().has_value());
      EXPECT_EQ(s.m(s.mult[*s.index_minus()].first) % 2, 1);
      int expected_minus = 1;
      for (const auto& [c, m] : s.mult) {
        if (c.family() == Family::F1 && m % 2 == 1) expected_minus = -expected_minus;
      }
      if (const auto k = s.index_plus()) {
        EXPECT_EQ(s.mult[*k].second % 2, 0);
        EXPECT_NE(s.eta_plus, 0);
        expected_minus *= s.eta_plus;
      } else {
        EXPECT_EQ(s.eta_plus, 0);
      }
      EXPECT_EQ(s.eta_minus, expected_minus);
    }
    for (const auto& s : ellp) {
      for (const auto& [c, m] : s.mult) EXPECT_TRUE(is_ell_prime_order(c, ctx));
    }
  }
}

TEST(Blocks, WeightExample) {
  const auto ctx = make_context(3, 1, 5);
  const auto blocks = enumerate_blocks(ctx, 2);
  const LSymbol defect_one({0}, {});
  bool found = false;
  for (const auto& b : blocks) {
    if (b.s.mult.size() == 1 && b.kappa.front() == Shape(defect_one)) {
      found = true;
      EXPECT_EQ(b.s.mult.front().second, 5);
      EXPECT_EQ(weights_of(ctx, b), std::vector<int>{1});
      EXPECT_EQ(enumerate_ibr(ctx, b).size(), enumerate_weights_Q(ctx, b).size());
      EXPECT_EQ(enumerate_weights_Q(ctx, b).size(), 4u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Blocks, WeightRejectsInconsistentCore) {
  const auto ctx = make_context(3, 1, 5);
  const auto s = enumerate_semisimple(ctx, 1, true).front();
  BlockLabel b{s, {}, 0};
  for (const auto& [c, m] : s.mult) {
    if (c.family() == Family::F0) {
      b.kappa.emplace_back(LSymbol({9}, {}));
    } else {
      b.kappa.emplace_back(Partition{m + 1});
    }
  }
  EXPECT_THROW(weights_of(ctx, b), std::invalid_argument);
}

TEST(Blocks, DefectEquationHolds) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    for (const auto& b : enumerate_blocks(ctx, cfg.n)) {
      const auto w = weights_of(ctx, b);
      for (std::size_t k = 0; k < w.size(); ++k) {
        const auto& [c, m] = b.s.mult[k];
        EXPECT_GE(w[k], 0);
        if (c.family() != Family::F0) {
          EXPECT_EQ(m, size(std::get<Partition>(b.kappa[k])) + static_cast<int>(c.e_gamma()) * w[k]);
        } else {
          const int r = std::get<LSymbol>(b.kappa[k]).rank();
          EXPECT_EQ(m, 2 * r + (c.is_x_minus_one() ? 1 : 0) + 2 * static_cast<int>(ctx.e) * w[k]);
        }
      }
    }
  }
}

TEST(Blocks, SplitExactlyOverNonDegeneratePlusCores) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    const auto blocks = enumerate_blocks(ctx, cfg.n);
    EXPECT_EQ(std::set<BlockLabel>(blocks.begin(), blocks.end()).size(), blocks.size());
    std::map<std::pair<SemisimpleLabel, std::vector<Shape>>, std::set<int>> is;
    for (const auto& b : blocks) is[{b.s, b.kappa}].insert(b.i);
    for (const auto& [key, set] : is) {
      const bool split = !plus_symbol(key.first, key.second).is_degenerate();
      EXPECT_EQ(set, split ? (std::set<int>{0, 1}) : (std::set<int>{0}));
    }
  }
}

TEST(Brauer, BlockMembersAreTheUniverseFibres) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    const auto universe = enumerate_ibr_universe(ctx, cfg.n);
    EXPECT_EQ(std::set<IBrLabel>(universe.begin(), universe.end()).size(), universe.size());
    std::map<BlockLabel, std::set<IBrLabel>> fibres;
    for (const auto& x : universe) fibres[block_of(ctx, x)].insert(x);
    const auto blocks = enumerate_blocks(ctx, cfg.n);
    std::size_t total = 0;
    for (const auto& b : blocks) {
      const auto members = enumerate_ibr(ctx, b);
      total += members.size();
      EXPECT_EQ(std::set<IBrLabel>(members.begin(), members.end()), fibres[b]) << name_of(cfg);
    }
    EXPECT_EQ(total, universe.size()) << name_of(cfg);
    EXPECT_EQ(fibres.size(), blocks.size()) << name_of(cfg);
  }
}

TEST(Brauer, CoresAgreeWithHookStripping) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    const int e = static_cast<int>(ctx.e);
    for (const auto& x : enumerate_ibr_universe(ctx, cfg.n)) {
      const auto b = block_of(ctx, x);
      for (std::size_t k = 0; k < x.lambda.size(); ++k) {
        const auto& c = x.s.mult[k].first;
        if (c.family() == Family::F0) {
          const auto r = strip_hooks(std::get<LSymbol>(x.lambda[k]), e, symbol_mode(ctx), 17);
          EXPECT_EQ(b.kappa[k], Shape(r.core));
        } else {
          const auto& lam = std::get<Partition>(x.lambda[k]);
          const auto& kap = std::get<Partition>(b.kappa[k]);
          EXPECT_TRUE(is_e_core(kap, static_cast<int>(c.e_gamma())));
          EXPECT_EQ((size(lam) - size(kap)) % static_cast<int>(c.e_gamma()), 0);
        }
      }
    }
  }
}

TEST(Brauer, UniverseMatchesClassNumberWhenEllIsCoprime) {
  // Sp_2n(q) has order prime to ell exactly when the order of q^2 mod ell exceeds n.
  for (const auto& cfg : std::vector<Config>{{3, 1, 5, 1}, {3, 1, 7, 2}, {5, 1, 7, 2}, {3, 1, 11, 3}, {3, 2, 7, 2}}) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    ASSERT_GT(ctx.e, cfg.n);
    const auto universe = enumerate_ibr_universe(ctx, cfg.n);
    EXPECT_EQ(static_cast<long long>(universe.size()), class_number(static_cast<long long>(ctx.q), cfg.n))
        << name_of(cfg);
    const auto blocks = enumerate_blocks(ctx, cfg.n);
    EXPECT_EQ(blocks.size(), universe.size());
    for (const auto& b : blocks) {
      for (int w : weights_of(ctx, b)) EXPECT_EQ(w, 0);
    }
  }
}

TEST(Brauer, ClassNumberOracleSelfCheck) {
  EXPECT_EQ(class_number(3, 1), 7);
  EXPECT_EQ(class_number(5, 1), 9);
  EXPECT_EQ(class_number(3, 2), 34);
}

TEST(Weights, CountsFollowTheProductFormula) {
  for (const auto& cfg : kConfigs) {
    const auto ctx = make_context(cfg.p, cfg.f, cfg.ell);
    for (const auto& b : enumerate_blocks(ctx, cfg.n)) {
      long long expected = 1;
      const auto w = weights_of(ctx, b);
      for (std::size_t k = 0; k < w.size(); ++k) {
        const auto& c = b.s.mult[k].first;
        expected *= tuple_count(static_cast<int>(c.beta() * c.e_gamma()), w[k]);
      }
      const auto q = enumerate_weights_Q(ctx, b);
      const auto kf = enumerate_weights_K(ctx, b);
      EXPECT_EQ(static_cast<long long>(q.size()), expected);
      EXPECT_EQ(kf.size(), q.size());
      EXPECT_EQ(std::set<WeightLabelQ>(q.begin(), q.end()).size(), q.size());
      std::set<WeightLabelQ> from_k;
      for (const auto& x : kf) {
        EXPECT_EQ(Q_to_K(ctx, K_to_Q(ctx, x)), x);
        from_k.insert(K_to_Q(ctx, x));
      }
      EXPECT_EQ(from_k, std::set<WeightLabelQ>(q.begin(), q.end()));
    }
  }
}

TEST(Weights, KFormBranchesAndLevels) {
  const auto ctx = make_context(3, 1, 5);
  for (const auto& b : enumerate_blocks(ctx, 3)) {
    for (const auto& wk : enumerate_weights_K(ctx, b)) {
      ASSERT_EQ(wk.K.size(), b.s.mult.size());
      int total = 0;
      for (std::size_t k = 0; k < wk.K.size(); ++k) {
        EXPECT_EQ(static_cast<int>(wk.K[k].size()), tuple_length(ctx, b.s.mult[k].first));
        int sum = 0;
        for (const auto& t : wk.K[k]) sum += tower_weight(t, 5);
        EXPECT_EQ(sum, weight_of(ctx, b, k));
        total += sum;
      }
      const auto shape = radical_shape(ctx, wk);
      int shape_total = 0;
      for (const auto& entry : shape) {
        EXPECT_GT(entry.t, 0);
        int scale = 1;
        for (int d = 0; d < entry.delta; ++d) scale *= 5;
        shape_total += scale * entry.t;
      }
      EXPECT_EQ(shape_total, total);
    }
  }
}
