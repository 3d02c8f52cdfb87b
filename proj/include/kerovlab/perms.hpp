#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kerovlab/ncpart.hpp"

namespace kerovlab {

using Cycle = std::vector<int>;

/// Permutation of {1..n} in one-line notation (word[i-1] = w(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::domain_error unless word is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  /// The long cycle c_n = (1 2 ... n).
  static Permutation long_cycle(int n);
  /// Cycles may omit fixed points; each cycle maps c[i] -> c[i+1].
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  /// All cycles (fixed points included), each starting at its minimum,
  /// ordered by minimum.
  std::vector<Cycle> cycles() const;
  int cycle_count() const;
  Permutation inverse() const;

  /// "1 3 2"
  std::string word_string() const;
  /// "(1 3)(2)"
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Composition, right factor first: (u * w)(i) = u(w(i)).
Permutation operator*(const Permutation& u, const Permutation& w);

/// beta(tau): the product of the increasing cycles of the blocks.
Permutation biane(const NoncrossingPartition& tau);
/// The partition of w's cycles, or nullopt when w is outside [id_n, c_n].
std::optional<NoncrossingPartition> biane_inverse(const Permutation& w);

/// l_T(w) = n - (number of cycles).
int absolute_length(const Permutation& w);
/// u <=_T w iff l_T(w) = l_T(u) + l_T(u^{-1} w).
bool leq_T(const Permutation& u, const Permutation& w);

/// T_w: for each cycle with elements c_1 < ... < c_h, the transpositions
/// (c_a c_b) with a < b < h. Returned as ascending pairs.
std::vector<std::pair<int, int>> t_w_set(const Permutation& w);

/// Cycles written from their minima, arranged by decreasing minima,
/// parentheses dropped.
Permutation foata_min(const Permutation& w);
/// Cycles arranged by decreasing maxima, parentheses dropped, then the
/// word reversed.
Permutation foata_max(const Permutation& w);

/// Nontrivial left-to-right minima (the value 1 excluded).
std::vector<int> ltr_minima(const Permutation& w);
/// Nontrivial left-to-right maxima (the value n excluded).
std::vector<int> ltr_maxima(const Permutation& w);
std::vector<int> descents(const Permutation& w);
std::vector<int> excedances(const Permutation& w);

/// Checks Min(u_min) subset Min(w_min) and Max(u_max) subset Max(w_max)
/// for w = beta(tau), u = beta(pi). Requires tau <=^irr pi.
bool min_max_inclusion(const NoncrossingPartition& tau, const NoncrossingPartition& pi);
/// Over the upper set of tau, pi -> Min and pi -> Max are both injective.
bool min_max_injective(const NoncrossingPartition& tau);

/// {i >= 1 : i+1 is the minimum of its block}.
std::vector<int> block_min_set(const NoncrossingPartition& tau);

/// Classical pattern containment; pattern is a word on {1..m}.
bool contains_pattern(const Permutation& w, const std::vector<int>& pattern);
bool avoids(const Permutation& w, const std::vector<int>& pattern);
inline constexpr int kMaxAvoiderSize = 10;
/// Pattern avoiders of S_n in lexicographic order. n <= 10.
std::vector<Permutation> enumerate_avoiders(int n, const std::vector<int>& pattern);

enum class BonaSimionVariant { descents, excedances };

/// A realized bijection NC_n -> P_n (descents, 132-avoiders) or
/// NC_n -> Q_n (excedances, 321-avoiders).
struct BonaSimionTable {
  BonaSimionVariant variant;
  int n = 0;
  /// Sources in enumerate_nc order, with their images.
  std::vector<std::pair<NoncrossingPartition, Permutation>> entries;
  /// tau <= pi implies stat(f(pi)) subset stat(f(tau)).
  bool refinement_reverses_inclusion = false;
  /// tau <= pi implies stat(f(tau)) subset stat(f(pi)).
  bool refinement_preserves_inclusion = false;
};

inline constexpr int kMaxBonaSimionSize = 7;

/// Finds a bijection whose image statistic equals block_min_set of the
/// source. Candidates in each statistic class are matched in lexicographic
/// order. Returns nullopt when no such bijection exists. n <= 7.
std::optional<BonaSimionTable> realize_bona_simion(int n, BonaSimionVariant variant);

}  // namespace kerovlab
