#include "kerovlab/perms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kerovlab/errors.hpp"
#include "kerovlab/irrorder.hpp"

namespace kerovlab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("word is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::long_cycle(int n) {
  Cycle c(static_cast<std::size_t>(n));
  std::iota(c.begin(), c.end(), 1);
  return from_cycles(n, {c});
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from)])
        throw std::domain_error("cycles are not disjoint within {1..n}");
      used[static_cast<std::size_t>(from)] = true;
      w[static_cast<std::size_t>(from - 1)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b) throw std::domain_error("transposition needs two distinct points");
  return from_cycles(n, {{a, b}});
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(word_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(w));
}

std::string Permutation::word_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::domain_error("composing permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation(std::move(out));
}

Permutation biane(const NoncrossingPartition& tau) {
  const auto elems = tau.ground();
  if (!elems.empty() && elems.back() != static_cast<int>(elems.size()))
    throw std::domain_error("biane: ground set must be {1..n}");
  return Permutation::from_cycles(static_cast<int>(elems.size()), tau.blocks());
}

std::optional<NoncrossingPartition> biane_inverse(const Permutation& w) {
  const int n = w.size();
  if (!leq_T(w, Permutation::long_cycle(n))) return std::nullopt;
  std::vector<Block> blocks;
  for (auto c : w.cycles()) {
    // Inside [id, c_n] every cycle is increasing.
    if (!std::is_sorted(c.begin(), c.end())) return std::nullopt;
    blocks.push_back(std::move(c));
  }
  return NoncrossingPartition(std::move(blocks));
}

int absolute_length(const Permutation& w) { return w.size() - w.cycle_count(); }

bool leq_T(const Permutation& u, const Permutation& w) {
  return absolute_length(w) == absolute_length(u) + absolute_length(u.inverse() * w);
}

std::vector<std::pair<int, int>> t_w_set(const Permutation& w) {
  if (!biane_inverse(w)) throw std::domain_error("t_w_set: permutation is not in [id_n, c_n]");
  std::vector<std::pair<int, int>> out;
  for (auto c : w.cycles()) {
    std::sort(c.begin(), c.end());
    for (std::size_t a = 0; a + 1 < c.size(); ++a)
      for (std::size_t b = a + 1; b + 1 < c.size(); ++b) out.emplace_back(c[a], c[b]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation foata_min(const Permutation& w) {
  auto cycles = w.cycles();
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() > b.front(); });
  std::vector<int> word;
  for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
  return Permutation(std::move(word));
}

Permutation foata_max(const Permutation& w) {
  auto cycles = w.cycles();
  auto top = [](const Cycle& c) { return *std::max_element(c.begin(), c.end()); };
  std::sort(cycles.begin(), cycles.end(),
            [&](const Cycle& a, const Cycle& b) { return top(a) > top(b); });
  std::vector<int> word;
  for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
  std::reverse(word.begin(), word.end());
  return Permutation(std::move(word));
}

std::vector<int> ltr_minima(const Permutation& w) {
  std::vector<int> out;
  int best = w.size() + 1;
  for (int v : w.word()) {
    if (v < best) {
      best = v;
      if (v != 1) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ltr_maxima(const Permutation& w) {
  std::vector<int> out;
  int best = 0;
  for (int v : w.word()) {
    if (v > best) {
      best = v;
      if (v != w.size()) out.push_back(v);
    }
  }
  return out;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> excedances(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) > i) out.push_back(i);
  return out;
}

bool min_max_inclusion(const NoncrossingPartition& tau, const NoncrossingPartition& pi) {
  if (!is_irreducible(tau) || !is_irreducible(pi) || !leq_irr(tau, pi))
    throw std::domain_error("min_max_inclusion requires tau <=^irr pi");
  const Permutation w = biane(tau);
  const Permutation u = biane(pi);
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return subset(ltr_minima(foata_min(u)), ltr_minima(foata_min(w))) &&
         subset(ltr_maxima(foata_max(u)), ltr_maxima(foata_max(w)));
}

bool min_max_injective(const NoncrossingPartition& tau) {
  const auto ups = upper_set(tau);
  std::set<std::vector<int>> mins;
  std::set<std::vector<int>> maxs;
  for (const auto& pi : ups) {
    const Permutation u = biane(pi);
    mins.insert(ltr_minima(foata_min(u)));
    maxs.insert(ltr_maxima(foata_max(u)));
  }
  return mins.size() == ups.size() && maxs.size() == ups.size();
}

std::vector<int> block_min_set(const NoncrossingPartition& tau) {
  std::vector<int> out;
  for (const auto& b : tau.blocks())
    if (b.front() >= 2) out.push_back(b.front() - 1);
  return out;
}

bool contains_pattern(const Permutation& w, const std::vector<int>& pattern) {
  const std::size_t m = pattern.size();
  const std::size_t n = static_cast<std::size_t>(w.size());
  if (m == 0) return true;
  if (m > n) return false;
  // Try every index subset of size m; pattern sizes here are tiny.
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool match = true;
    for (std::size_t a = 0; a < m && match; ++a)
      for (std::size_t b = a + 1; b < m && match; ++b)
        match = (w.word()[idx[a]] < w.word()[idx[b]]) == (pattern[a] < pattern[b]);
    if (match) return true;
    std::size_t pos = m;
    while (pos-- > 0) {
      if (idx[pos] < n - m + pos) break;
      if (pos == 0) return false;
    }
    ++idx[pos];
    for (std::size_t j = pos + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool avoids(const Permutation& w, const std::vector<int>& pattern) {
  return !contains_pattern(w, pattern);
}

std::vector<Permutation> enumerate_avoiders(int n, const std::vector<int>& pattern) {
  if (n < 0 || n > kMaxAvoiderSize)
    throw SizeLimitError("enumerate_avoiders requires n <= " + std::to_string(kMaxAvoiderSize));
  Permutation(std::vector<int>(pattern));  // validates the pattern
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    Permutation w(word);
    if (avoids(w, pattern)) out.push_back(std::move(w));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::optional<BonaSimionTable> realize_bona_simion(int n, BonaSimionVariant variant) {
  if (n < 1 || n > kMaxBonaSimionSize)
    throw SizeLimitError("realize_bona_simion requires 1 <= n <= " +
                         std::to_string(kMaxBonaSimionSize));
  const bool by_descents = variant == BonaSimionVariant::descents;
  const std::vector<int> pattern = by_descents ? std::vector<int>{1, 3, 2} : std::vector<int>{3, 2, 1};
  auto stat = [&](const Permutation& w) { return by_descents ? descents(w) : excedances(w); };

  std::map<std::vector<int>, std::vector<Permutation>> targets;
  for (auto& w : enumerate_avoiders(n, pattern)) targets[stat(w)].push_back(std::move(w));

  const auto sources = enumerate_nc(n);
  std::map<std::vector<int>, std::size_t> next;
  BonaSimionTable table{variant, n, {}, true, true};
  for (const auto& tau : sources) {
    const auto key = block_min_set(tau);
    auto it = targets.find(key);
    std::size_t& used = next[key];
    if (it == targets.end() || used >= it->second.size()) return std::nullopt;
    table.entries.emplace_back(tau, it->second[used++]);
  }
  for (const auto& [key, used] : next)
    if (used != targets[key].size()) return std::nullopt;

  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& [tau, f_tau] : table.entries) {
    for (const auto& [pi, f_pi] : table.entries) {
      if (!refines(tau, pi)) continue;
      table.refinement_reverses_inclusion &= subset(stat(f_pi), stat(f_tau));
      table.refinement_preserves_inclusion &= subset(stat(f_tau), stat(f_pi));
    }
  }
  return table;
}

}  // namespace kerovlab
