#pragma once

#include <vector>

#include "kerovlab/ncpart.hpp"

namespace kerovlab {

/// Labeled rooted tree of an irreducible noncrossing partition. Nodes are
/// the blocks in canonical order (node 0 is the block of the minimum, the
/// root); every other block hangs below the innermost block enclosing it,
/// on an edge labeled with the block's minimum.
struct IrrTree {
  struct Edge {
    int parent;
    int child;
    int label;
  };

  NoncrossingPartition partition;
  /// parent[i] for node i; -1 for the root.
  std::vector<int> parent;
  /// One edge per non-root node, ordered by child index.
  std::vector<Edge> edges;

  /// E(tau), ascending.
  std::vector<int> labels() const;
  /// The child node behind a label, or -1.
  int node_with_label(int label) const;
};

IrrTree build_tree(const NoncrossingPartition& tau);

/// tau_S: merges each labeled block into its parent. Labels are removed
/// in ascending order; the result does not depend on the order.
NoncrossingPartition contract(const NoncrossingPartition& tau, const std::vector<int>& labels);
/// Removes labels one at a time in the given order, rebuilding the tree
/// after each step.
NoncrossingPartition contract_in_order(const NoncrossingPartition& tau,
                                       const std::vector<int>& order);

/// tau <=^irr pi: tau refines pi and tau restricted to each block of pi is
/// irreducible on that block.
bool leq_irr(const NoncrossingPartition& tau, const NoncrossingPartition& pi);

/// {tau_S : S subset of E(tau)}, 2^{l(tau)-1} elements, indexed by the bit
/// mask of S over labels() (entry 0 is tau itself).
std::vector<NoncrossingPartition> upper_set(const NoncrossingPartition& tau);
/// {tau_{j} : j in E(tau)}, in label order.
std::vector<NoncrossingPartition> covers(const NoncrossingPartition& tau);

}  // namespace kerovlab
