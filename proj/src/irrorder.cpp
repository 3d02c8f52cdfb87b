#include "kerovlab/irrorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace kerovlab {

namespace {

void require_irreducible(const NoncrossingPartition& tau, const char* where) {
  if (!is_irreducible(tau))
    throw std::domain_error(std::string(where) + ": " + tau.to_string() + " is not irreducible");
}

NoncrossingPartition merge_blocks(const NoncrossingPartition& p, int keep, int absorb) {
  auto blocks = p.blocks();
  auto& target = blocks[static_cast<std::size_t>(keep)];
  const auto& source = blocks[static_cast<std::size_t>(absorb)];
  target.insert(target.end(), source.begin(), source.end());
  std::sort(target.begin(), target.end());
  blocks.erase(blocks.begin() + absorb);
  // Merging a child into its enclosing block never changes the order of minima.
  return NoncrossingPartition(std::move(blocks), NoncrossingPartition::Canonical{});
}

}  // namespace

std::vector<int> IrrTree::labels() const {
  std::vector<int> out;
  for (const auto& e : edges) out.push_back(e.label);
  std::sort(out.begin(), out.end());
  return out;
}

int IrrTree::node_with_label(int label) const {
  for (const auto& e : edges)
    if (e.label == label) return e.child;
  return -1;
}

IrrTree build_tree(const NoncrossingPartition& tau) {
  require_irreducible(tau, "build_tree");
  IrrTree tree{tau, {}, {}};
  const auto& blocks = tau.blocks();
  tree.parent.assign(blocks.size(), -1);
  for (std::size_t j = 1; j < blocks.size(); ++j) {
    const int lo = blocks[j].front();
    const int hi = blocks[j].back();
    // Enclosing blocks are nested, so the innermost one has the largest index.
    int parent = 0;
    for (std::size_t i = j; i-- > 1;) {
      if (blocks[i].front() < lo && hi < blocks[i].back()) {
        parent = static_cast<int>(i);
        break;
      }
    }
    tree.parent[j] = parent;
    tree.edges.push_back({parent, static_cast<int>(j), lo});
  }
  return tree;
}

NoncrossingPartition contract_in_order(const NoncrossingPartition& tau,
                                       const std::vector<int>& order) {
  require_irreducible(tau, "contract");
  NoncrossingPartition current = tau;
  for (int label : order) {
    const IrrTree tree = build_tree(current);
    const int child = tree.node_with_label(label);
    if (child < 0)
      throw std::domain_error("contract: " + std::to_string(label) + " is not a label of " +
                              current.to_string());
    current = merge_blocks(current, tree.parent[static_cast<std::size_t>(child)], child);
  }
  return current;
}

NoncrossingPartition contract(const NoncrossingPartition& tau, const std::vector<int>& labels) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("contract: repeated label");
  return contract_in_order(tau, sorted);
}

bool leq_irr(const NoncrossingPartition& tau, const NoncrossingPartition& pi) {
  if (tau.ground() != pi.ground()) return false;
  if (!refines(tau, pi)) return false;
  for (const auto& block : pi.blocks())
    if (!is_irreducible(restrict(tau, block))) return false;
  return true;
}

std::vector<NoncrossingPartition> upper_set(const NoncrossingPartition& tau) {
  const IrrTree tree = build_tree(tau);
  const auto labels = tree.labels();
  const std::size_t count = std::size_t{1} << labels.size();
  std::vector<NoncrossingPartition> out;
  out.reserve(count);
  // Union-find over the original tree: tau_S is the set of components left
  // after merging every edge whose label is in S.
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> root(tau.blocks().size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
      return x;
    };
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (!(mask >> b & 1U)) continue;
      const int child = tree.node_with_label(labels[b]);
      root[static_cast<std::size_t>(find(child))] =
          find(tree.parent[static_cast<std::size_t>(child)]);
    }
    std::vector<Block> merged(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
      auto& target = merged[static_cast<std::size_t>(find(static_cast<int>(i)))];
      target.insert(target.end(), tau.blocks()[i].begin(), tau.blocks()[i].end());
    }
    std::vector<Block> blocks;
    for (auto& b : merged) {
      if (b.empty()) continue;
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    out.emplace_back(std::move(blocks), NoncrossingPartition::Canonical{});
  }
  return out;
}

std::vector<NoncrossingPartition> covers(const NoncrossingPartition& tau) {
  std::vector<NoncrossingPartition> out;
  for (int label : build_tree(tau).labels()) out.push_back(contract(tau, {label}));
  return out;
}

}  // namespace kerovlab
