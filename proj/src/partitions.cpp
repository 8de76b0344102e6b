#include "spbaw/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace spbaw {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int tuple_size(const std::vector<Partition>& t) {
  int s = 0;
  for (const auto& p : t) s += size(p);
  return s;
}

BetaSet beta_set(const Partition& p, int len) {
  if (len < static_cast<int>(p.size())) {
    throw std::invalid_argument("beta_set: length " + std::to_string(len) + " is below the number of parts");
  }
  BetaSet b(len);
  for (int i = 0; i < len; ++i) b[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + len - 1 - i;
  return b;
}

Partition partition_of(const BetaSet& b) {
  Partition p;
  const int len = static_cast<int>(b.size());
  for (int i = 0; i < len; ++i) {
    const int part = b[i] - (len - 1 - i);
    if (part < 0) throw std::invalid_argument("partition_of: not a strictly decreasing set of naturals");
    if (part > 0) p.push_back(part);
  }
  return p;
}

bool has_e_hook(const Partition& p, int e) {
  const BetaSet b = beta_set(p, static_cast<int>(p.size()));
  const std::set<int> beads(b.begin(), b.end());
  for (int x : b) {
    if (x - e >= 0 && !beads.contains(x - e)) return true;
  }
  return false;
}

namespace {

int round_up(int x, int e) { return (x + e - 1) / e * e; }

}  // namespace

CoreQuotient e_core_quotient(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e_core_quotient: e must be positive");
  const int len = round_up(static_cast<int>(p.size()), e);
  const BetaSet b = beta_set(p, len);
  std::vector<BetaSet> runners(e);
  for (int x : b) runners[x % e].push_back(x / e);  // descending within each runner
  CoreQuotient out;
  out.quotient.resize(e);
  BetaSet core_beads;
  for (int r = 0; r < e; ++r) {
    out.quotient[r] = partition_of(runners[r]);
    for (int k = 0; k < static_cast<int>(runners[r].size()); ++k) core_beads.push_back(r + e * k);
  }
  std::sort(core_beads.rbegin(), core_beads.rend());
  out.core = partition_of(core_beads);
  return out;
}

Partition from_core_quotient(const Partition& core, const EQuotient& quotient) {
  const int e = static_cast<int>(quotient.size());
  if (e < 1) throw std::invalid_argument("from_core_quotient: empty quotient tuple");
  if (!is_e_core(core, e)) throw std::invalid_argument("from_core_quotient: core is not an e-core");
  std::size_t longest = 0;
  for (const auto& q : quotient) longest = std::max(longest, q.size());
  const int len = round_up(static_cast<int>(core.size()), e) + e * static_cast<int>(longest);
  std::vector<int> counts(e, 0);
  for (int x : beta_set(core, len)) ++counts[x % e];
  BetaSet beads;
  for (int r = 0; r < e; ++r) {
    for (int k : beta_set(quotient[r], counts[r])) beads.push_back(r + e * k);
  }
  std::sort(beads.rbegin(), beads.rend());
  return partition_of(beads);
}

CoreTower core_tower(const Partition& p, int ell) {
  if (ell < 2) throw std::invalid_argument("core_tower: ell must be at least 2");
  CoreTower t;
  if (p.empty()) return t;
  const CoreQuotient cq = e_core_quotient(p, ell);
  t.levels.push_back({cq.core});
  std::vector<CoreTower> children;
  std::size_t depth = 0;
  for (const auto& q : cq.quotient) {
    children.push_back(core_tower(q, ell));
    depth = std::max(depth, children.back().levels.size());
  }
  std::size_t width = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Partition> level;
    for (const auto& c : children) {
      if (d < c.levels.size()) {
        level.insert(level.end(), c.levels[d].begin(), c.levels[d].end());
      } else {
        level.resize(level.size() + width);
      }
    }
    t.levels.push_back(std::move(level));
    width *= ell;
  }
  return t;
}

Partition tower_to_partition(const CoreTower& t, int ell) {
  if (ell < 2) throw std::invalid_argument("tower_to_partition: ell must be at least 2");
  std::size_t width = 1;
  for (const auto& level : t.levels) {
    if (level.size() != width) throw std::invalid_argument("tower_to_partition: level has the wrong number of entries");
    for (const auto& c : level) {
      if (!is_partition(c) || !is_e_core(c, ell)) throw std::invalid_argument("tower_to_partition: entry is not an ell-core");
    }
    width *= ell;
  }
  std::vector<Partition> below;
  for (std::size_t d = t.levels.size(); d-- > 0;) {
    const auto& level = t.levels[d];
    std::vector<Partition> here(level.size());
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      EQuotient quo(ell);
      if (!below.empty()) {
        for (int j = 0; j < ell; ++j) quo[j] = below[idx * ell + j];
      }
      here[idx] = from_core_quotient(level[idx], quo);
    }
    below = std::move(here);
  }
  return below.empty() ? Partition{} : below[0];
}

int tower_weight(const CoreTower& t, int ell) {
  int w = 0;
  int scale = 1;
  for (const auto& level : t.levels) {
    w += scale * tuple_size(level);
    scale *= ell;
  }
  return w;
}

std::vector<Partition> enumerate_partitions(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Partition> enumerate_e_cores(int e, int max_size) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m) {
    for (auto& p : enumerate_partitions(m)) {
      if (is_e_core(p, e)) out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

// Ordered k-tuples whose entries are drawn from pool(size), with total size w.
template <class Pool>
std::vector<std::vector<Partition>> tuples_from(int k, int w, const Pool& pool) {
  std::vector<std::vector<Partition>> out;
  if (k < 0 || w < 0) return out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int slot, int rest) {
    if (slot == k) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    const int lo = slot + 1 == k ? rest : 0;
    for (int s = rest; s >= lo; --s) {
      for (const auto& p : pool(s)) {
        cur.push_back(p);
        rec(slot + 1, rest - s);
        cur.pop_back();
      }
    }
  };
  rec(0, w);
  return out;
}

}  // namespace

std::vector<std::vector<Partition>> enumerate_tuples(int k, int w) {
  std::map<int, std::vector<Partition>> cache;
  auto pool = [&](int s) -> const std::vector<Partition>& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, enumerate_partitions(s)).first;
    return it->second;
  };
  return tuples_from(k, w, pool);
}

std::vector<CoreTower> enumerate_towers(int ell, int w) {
  if (ell < 2) throw std::invalid_argument("enumerate_towers: ell must be at least 2");
  std::map<int, std::vector<Partition>> by_size;
  for (auto& c : enumerate_e_cores(ell, std::max(w, 0))) by_size[size(c)].push_back(std::move(c));
  static const std::vector<Partition> kNone;
  auto pool = [&](int s) -> const std::vector<Partition>& {
    auto it = by_size.find(s);
    return it == by_size.end() ? kNone : it->second;
  };

  std::vector<CoreTower> out;
  if (w < 0) return out;
  // Choose the level weights c_d with sum ell^d c_d = w, then fill each level.
  std::vector<std::vector<Partition>> chosen;
  std::function<void(int, int, int)> rec = [&](int depth, int width, int rest) {
    if (rest == 0) {
      CoreTower t;
      t.levels = chosen;
      while (!t.levels.empty() && tuple_size(t.levels.back()) == 0) t.levels.pop_back();
      out.push_back(std::move(t));
      return;
    }
    if (width > rest) return;
    for (int c = rest / width; c >= 0; --c) {
      for (auto& level : tuples_from(width, c, pool)) {
        chosen.push_back(std::move(level));
        rec(depth + 1, width * ell, rest - c * width);
        chosen.pop_back();
      }
    }
  };
  rec(0, 1, w);
  return out;
}

}  // namespace spbaw
