#pragma once

#include <vector>

namespace spbaw {

/// Weakly decreasing positive parts; empty is the empty partition.
using Partition = std::vector<int>;
/// Strictly decreasing naturals.
using BetaSet = std::vector<int>;
/// Ordered e-tuple of partitions, indexed by abacus runner.
using EQuotient = std::vector<Partition>;

int size(const Partition& p);
bool is_partition(const Partition& p);
int tuple_size(const std::vector<Partition>& t);

/// {p_i + len - i}; throws std::invalid_argument if len < number of parts.
BetaSet beta_set(const Partition& p, int len);
Partition partition_of(const BetaSet& b);

/// True iff some bead can slide e positions down onto a free position.
bool has_e_hook(const Partition& p, int e);
inline bool is_e_core(const Partition& p, int e) { return !has_e_hook(p, e); }

struct CoreQuotient {
  Partition core;
  EQuotient quotient;
};

/// Abacus decomposition on a beta-set whose length is the least multiple of e
/// that is at least the number of parts; quotient[r] is read off runner r.
CoreQuotient e_core_quotient(const Partition& p, int e);

/// Inverse of e_core_quotient. Throws std::invalid_argument if core is not an
/// e-core for e = quotient.size().
Partition from_core_quotient(const Partition& core, const EQuotient& quotient);

/// levels[d] holds ell^d ell-cores; level 0 is the ell-core of the partition,
/// level d+1 concatenates the towers of the ell-quotient entries. Trailing
/// all-empty levels are dropped, so the empty partition has no levels.
struct CoreTower {
  std::vector<std::vector<Partition>> levels;
  friend bool operator==(const CoreTower&, const CoreTower&) = default;
  friend auto operator<=>(const CoreTower&, const CoreTower&) = default;
};

CoreTower core_tower(const Partition& p, int ell);
/// Inverse of core_tower; throws std::invalid_argument on malformed levels.
Partition tower_to_partition(const CoreTower& t, int ell);
/// Sum over levels of ell^d times the total size of level d.
int tower_weight(const CoreTower& t, int ell);

/// Partitions of m in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int m);
/// e-cores of size <= max_size, by size then descending lexicographic order.
std::vector<Partition> enumerate_e_cores(int e, int max_size);
/// Ordered k-tuples of partitions of total size w; the first component's size
/// runs from w down to 0 and each component follows enumerate_partitions.
std::vector<std::vector<Partition>> enumerate_tuples(int k, int w);
/// Every core tower of weight w; in bijection with the partitions of w.
std::vector<CoreTower> enumerate_towers(int ell, int w);

}  // namespace spbaw
