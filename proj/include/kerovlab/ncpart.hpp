#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"

namespace kerovlab {

using Block = std::vector<int>;

/// Noncrossing partition of a finite set of positive integers (usually
/// {1..n}, but restrictions and irreducible components live on subsets).
///
/// Canonical form: each block sorted ascending, blocks ordered by minimum.
/// Equality and ordering are structural on that form. The partition of the
/// empty set is a valid value.
class NoncrossingPartition {
 public:
  /// Tag for internal constructors that already produce canonical,
  /// noncrossing blocks.
  struct Canonical {};

  NoncrossingPartition() = default;
  /// Validates disjointness, nonemptiness and the noncrossing condition,
  /// then canonicalizes. Throws std::domain_error on invalid input.
  explicit NoncrossingPartition(std::vector<Block> blocks);
  NoncrossingPartition(std::vector<Block> blocks, Canonical) : blocks_(std::move(blocks)) {}

  /// Parses "{1,3}{2}".
  static NoncrossingPartition parse(const std::string& text);
  /// The one-block partition {1..n}.
  static NoncrossingPartition one_block(int n);
  /// The all-singletons partition of {1..n}.
  static NoncrossingPartition singletons_of(int n);

  const std::vector<Block>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }
  /// Sorted ground set.
  std::vector<int> ground() const;
  int ground_size() const;
  int min_element() const;
  int max_element() const;
  /// Index of the block holding x, or -1.
  int block_of(int x) const;

  /// "{1,2}{3}"; the empty partition renders as "{}".
  std::string to_string() const;

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend std::strong_ordering operator<=>(const NoncrossingPartition& a,
                                          const NoncrossingPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
};

/// True iff no a<b<c<d has a,c in one block and b,d in another.
/// The blocks must form a set partition (disjoint, nonempty).
bool is_noncrossing(const std::vector<Block>& blocks);

inline constexpr int kMaxEnumerationSize = 14;

/// All of NC_n in canonical form, C_n elements, ordered by restricted growth
/// string ({1..n} first, all singletons last). 1 <= n <= 14.
std::vector<NoncrossingPartition> enumerate_nc(int n);
/// Streams NC_n without materializing it.
void for_each_nc(int n, const std::function<void(const NoncrossingPartition&)>& visit);
/// NC_n^irr: noncrossing partitions of {1..n} with 1 and n in one block.
std::vector<NoncrossingPartition> enumerate_nc_irr(int n);

/// Minimum and maximum of the ground set share a block. False for the
/// empty partition.
bool is_irreducible(const NoncrossingPartition& p);

/// NC_n -> NC_{n+1}^irr: inserts n+1 into the block of 1.
NoncrossingPartition lift_irr(const NoncrossingPartition& p);
/// Inverse of lift_irr: removes the maximum of the ground set.
NoncrossingPartition drop_max(const NoncrossingPartition& p);

/// Block sizes as an integer partition.
IntegerPartition type_of(const NoncrossingPartition& p);

/// |NC_mu^irr| = (n-2)_{l(mu)-1} / m(mu)! where n = |mu|.
Integer count_nc_irr_by_type(const IntegerPartition& mu);

/// U(p): elements forming singleton blocks, ascending.
std::vector<int> singletons(const NoncrossingPartition& p);
/// p with its singleton blocks removed.
NoncrossingPartition strip_singletons(const NoncrossingPartition& p);
/// Removes every element outside `keep` (empty blocks disappear).
NoncrossingPartition restrict(const NoncrossingPartition& p, std::span<const int> keep);

/// Refinement: every block of fine lies inside a block of coarse.
/// Both must share a ground set.
bool refines(const NoncrossingPartition& fine, const NoncrossingPartition& coarse);

/// The irreducible components tau_1..tau_d, left to right.
std::vector<NoncrossingPartition> irreducible_components(const NoncrossingPartition& p);

}  // namespace kerovlab
