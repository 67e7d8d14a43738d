#ifndef TRICOLOR_ESSW_HPP
#define TRICOLOR_ESSW_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "tricolor/cones.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/rat.hpp"

namespace tricolor {

enum class EsswMode { paper, practical };

struct EsswParams {
  int k = 3;
  int l = 2;
  Rat epsilon;        // sampling failure target
  Rat delta;          // min-entropy parameter
  int sample_size;    // g(epsilon)
  Int f_bound;        // bound on |union of S_i^j|
  int max_retries = 50;
  EsswMode mode = EsswMode::practical;
};

// Closed-form constants: epsilon = 1/(4 l k^{k+3}),
// g = floor(ln eps / ln(1 - 1/2k)) + 1 (computed with exact comparisons),
// delta = 1/(8 l^3 k^{3k+7} g^2), f = (2/delta) k^{k+2} + l k^{k+2} g.
EsswParams paper_constants(int k, int l);
EsswParams practical_params(int k, int l, const Rat& delta, int sample_size, int max_retries = 50);

struct Distribution {
  std::vector<Rat> weights;  // indexed by digraph vertex, zero off support
  Rat sum() const {
    Rat s(0);
    for (const auto& w : weights) s += w;
    return s;
  }
  Rat mass_on(const BitRow& set) const {
    Rat s(0);
    for (int v = 0; v < static_cast<int>(weights.size()); ++v)
      if (!(weights[static_cast<std::size_t>(v)] == 0) && set.test(v)) s += weights[static_cast<std::size_t>(v)];
    return s;
  }
};

// w on `subset` with w(N^-(x)) >= 1/2 exactly for every x in subset.
Distribution fractional_dominating_distribution(const QuasiOrderMultiDigraph& d,
                                                const std::vector<int>& subset);

struct CappedDistribution {
  Distribution w;
  std::vector<int> capped;  // the final residual set, sorted; delta <= w <= 4 delta there
};

// Averaged LP rounds with running caps; every vertex lands in one of the two
// bullet conditions of the min-entropy lemma.
CappedDistribution capped_distribution(const QuasiOrderMultiDigraph& d,
                                       const std::vector<int>& subset, const Rat& delta);

struct PartitionStepResult {
  std::vector<std::vector<int>> T;  // T_1..T_k, disjoint, sorted
  std::vector<int> R;               // capped remainder
  Distribution w;
};

PartitionStepResult partition_step(const QuasiOrderMultiDigraph& d, const std::vector<int>& subset,
                                   const Rat& delta);

struct PartitionNode {
  enum Kind { internal, leaf_small, leaf_repeat };
  std::vector<int> seq;  // class indices 1..k; empty at the root
  std::vector<int> members;
  Kind kind = leaf_small;
  int repeat_pos = -1;        // leaf_repeat: smallest 1-based r with seq[r-1] == seq.back()
  Distribution w;             // internal: distribution used by the split
  std::vector<int> residual;  // internal: R child
};

struct PartitionTree {
  std::map<std::vector<int>, PartitionNode> nodes;
  int splits = 0;
  const PartitionNode& at(const std::vector<int>& seq) const {
    auto it = nodes.find(seq);
    if (it == nodes.end()) throw Error("partition tree node missing");
    return it->second;
  }
};

PartitionTree build_partition_tree(const QuasiOrderMultiDigraph& d, const EsswParams& params);

struct DominationFamily {
  int k = 0, l = 0;
  std::vector<std::vector<std::vector<int>>> sets;  // sets[i][j], sorted
  std::vector<int> dumped;                          // R + T_small, subset of sets[0][0]
  std::map<int, int> assigned_class;                // outside vertex -> 0-based class

  bool in_family(int v) const;
  std::vector<int> union_all() const;
  int union_size() const;
};

struct WitnessEntry {
  int cls = -1;               // 0-based
  std::vector<int> per_j;     // witness vertex per j
};

struct DominationReport {
  struct Overlap {
    int i1, j1, i2, j2, vertex;
  };
  std::vector<Overlap> overlaps;
  std::vector<int> unwitnessed;
  std::map<int, WitnessEntry> witnesses;
  bool ok() const { return overlaps.empty() && unwitnessed.empty(); }
};

DominationReport verify_domination(const QuasiOrderMultiDigraph& d, const DominationFamily& fam,
                                   int l);

struct RetriesExhausted : Error {
  RetriesExhausted(const std::string& msg, DominationFamily best_, DominationReport report_,
                   int attempts_)
      : Error(msg), best(std::move(best_)), report(std::move(report_)), attempts(attempts_) {}
  DominationFamily best;
  DominationReport report;
  int attempts;
};

// Las Vegas sampler: repeat-leaf multiset draws, dump of R + T_small into
// S_1^1, full verification, fresh randomness per retry.
DominationFamily sample_dominating_family(const QuasiOrderMultiDigraph& d, const PartitionTree& tree,
                                          const EsswParams& params, std::uint64_t seed);

// Greedy shrink: drops vertices whose removal keeps every outside vertex
// witnessed. Output passes verify_domination again.
DominationFamily prune_family(const QuasiOrderMultiDigraph& d, DominationFamily fam, int l);

}  // namespace tricolor

#endif
