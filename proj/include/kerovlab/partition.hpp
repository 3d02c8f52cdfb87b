#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kerovlab/rational.hpp"

namespace kerovlab {

/// Integer partition stored with weakly decreasing parts. Any order is
/// accepted on construction; (1,2) and (2,1) are the same value.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);
  IntegerPartition(std::initializer_list<int> parts)
      : IntegerPartition(std::vector<int>(parts)) {}

  /// Parses "3,1,1" (whitespace tolerated). The empty string is the empty partition.
  static IntegerPartition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;
  /// m(mu)! = product of m_i! over i.
  Integer multiplicity_factorial() const;
  /// The partition with every part equal to 1 removed.
  IntegerPartition without_ones() const;
  /// Conjugate (transposed) partition.
  IntegerPartition conjugate() const;

  /// "3,1,1"; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend std::strong_ordering operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, in decreasing lexicographic order ((n) first).
/// With max_parts >= 0 only partitions of at most that many parts are kept.
std::vector<IntegerPartition> integer_partitions(int n, int max_parts = -1);

}  // namespace kerovlab
