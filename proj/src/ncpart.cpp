#include "kerovlab/ncpart.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "kerovlab/errors.hpp"

namespace kerovlab {

namespace {

void check_enumeration_size(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw SizeLimitError("noncrossing enumeration requires 1 <= n <= " +
                         std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(n));
}

void canonicalize(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

// Orders partitions by their restricted growth strings (block index of each
// element, in ground order): {1,2,3} < {1,2}{3} < {1,3}{2} < {1}{2,3} < ...
void sort_by_growth_string(std::vector<NoncrossingPartition>& parts) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& blocks = parts[i].blocks();
    std::vector<std::pair<int, int>> owner;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int x : blocks[b]) owner.emplace_back(x, static_cast<int>(b));
    std::sort(owner.begin(), owner.end());
    std::vector<int> rgs;
    rgs.reserve(owner.size());
    for (const auto& [x, b] : owner) rgs.push_back(b);
    keys.emplace_back(std::move(rgs), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<NoncrossingPartition> sorted;
  sorted.reserve(parts.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(parts[i]));
  parts = std::move(sorted);
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::domain_error("empty block in set partition");
    for (int x : b) {
      if (x < 1) throw std::domain_error("set partition elements must be positive");
      if (!seen.insert(x).second)
        throw std::domain_error("element " + std::to_string(x) + " appears in two blocks");
    }
  }
  canonicalize(blocks_);
  if (!is_noncrossing(blocks_))
    throw std::domain_error("partition " + to_string() + " is crossing");
}

NoncrossingPartition NoncrossingPartition::parse(const std::string& text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "{}") return {};
  while (i < text.size()) {
    if (text[i] != '{') throw std::domain_error("bad partition syntax: " + text);
    ++i;
    Block b;
    while (true) {
      skip();
      std::size_t used = 0;
      try {
        b.push_back(std::stoi(text.substr(i), &used));
      } catch (const std::exception&) {
        throw std::domain_error("bad partition syntax: " + text);
      }
      i += used;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw std::domain_error("bad partition syntax: " + text);
    }
    blocks.push_back(std::move(b));
    skip();
  }
  return NoncrossingPartition(std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::one_block(int n) {
  Block b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
  return NoncrossingPartition({b}, Canonical{});
}

NoncrossingPartition NoncrossingPartition::singletons_of(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NoncrossingPartition(std::move(blocks), Canonical{});
}

std::vector<int> NoncrossingPartition::ground() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

int NoncrossingPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks_) n += static_cast<int>(b.size());
  return n;
}

int NoncrossingPartition::min_element() const {
  if (blocks_.empty()) throw std::domain_error("empty partition has no minimum");
  return blocks_.front().front();
}

int NoncrossingPartition::max_element() const {
  if (blocks_.empty()) throw std::domain_error("empty partition has no maximum");
  int m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.back());
  return m;
}

int NoncrossingPartition::block_of(int x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return static_cast<int>(i);
  return -1;
}

std::string NoncrossingPartition::to_string() const {
  if (blocks_.empty()) return "{}";
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

bool is_noncrossing(const std::vector<Block>& blocks) {
  // Walking the elements in order, a block may only be revisited if it is
  // the innermost one still open.
  std::map<int, std::size_t> owner;
  std::vector<int> last(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) owner[x] = i;
    last[i] = *std::max_element(blocks[i].begin(), blocks[i].end());
  }
  std::vector<std::size_t> open;
  std::vector<bool> started(blocks.size(), false);
  for (const auto& [x, b] : owner) {
    if (started[b]) {
      if (open.empty() || open.back() != b) return false;
    } else {
      started[b] = true;
      open.push_back(b);
    }
    if (x == last[b]) open.pop_back();
  }
  return true;
}

void for_each_nc(int n, const std::function<void(const NoncrossingPartition&)>& visit) {
  check_enumeration_size(n);
  // Element i either opens a new block or joins a block on the stack of
  // blocks that may still grow; joining closes everything opened after it.
  std::vector<Block> blocks;
  std::vector<std::size_t> stack;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      visit(NoncrossingPartition(blocks, NoncrossingPartition::Canonical{}));
      return;
    }
    for (std::size_t depth = stack.size(); depth-- > 0;) {
      std::vector<std::size_t> saved(stack.begin() + static_cast<std::ptrdiff_t>(depth) + 1,
                                     stack.end());
      std::size_t b = stack[depth];
      stack.resize(depth + 1);
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
      stack.insert(stack.end(), saved.begin(), saved.end());
    }
    blocks.push_back({i});
    stack.push_back(blocks.size() - 1);
    rec(i + 1);
    stack.pop_back();
    blocks.pop_back();
  };
  rec(1);
}

std::vector<NoncrossingPartition> enumerate_nc(int n) {
  std::vector<NoncrossingPartition> out;
  for_each_nc(n, [&](const NoncrossingPartition& p) { out.push_back(p); });
  sort_by_growth_string(out);
  return out;
}

std::vector<NoncrossingPartition> enumerate_nc_irr(int n) {
  check_enumeration_size(n);
  if (n == 1) return {NoncrossingPartition::one_block(1)};
  std::vector<NoncrossingPartition> out;
  for_each_nc(n - 1, [&](const NoncrossingPartition& p) { out.push_back(lift_irr(p)); });
  sort_by_growth_string(out);
  return out;
}

bool is_irreducible(const NoncrossingPartition& p) {
  if (p.empty()) return false;
  return p.block_of(p.max_element()) == 0;
}

NoncrossingPartition lift_irr(const NoncrossingPartition& p) {
  if (p.empty()) return NoncrossingPartition::one_block(1);
  auto blocks = p.blocks();
  blocks.front().push_back(p.max_element() + 1);
  return NoncrossingPartition(std::move(blocks), NoncrossingPartition::Canonical{});
}

NoncrossingPartition drop_max(const NoncrossingPartition& p) {
  if (p.empty()) throw std::domain_error("cannot drop from the empty partition");
  const int top = p.max_element();
  std::vector<Block> blocks;
  for (auto b : p.blocks()) {
    if (b.back() == top) b.pop_back();
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return NoncrossingPartition(std::move(blocks), NoncrossingPartition::Canonical{});
}

IntegerPartition type_of(const NoncrossingPartition& p) {
  std::vector<int> sizes;
  for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
  return IntegerPartition(std::move(sizes));
}

Integer count_nc_irr_by_type(const IntegerPartition& mu) {
  if (mu.empty()) throw std::domain_error("count_nc_irr_by_type needs a nonempty partition");
  const Integer num = falling_factorial(mu.size() - 2, mu.length() - 1);
  const Integer den = mu.multiplicity_factorial();
  if (num % den != 0)
    throw ConsistencyError("non-integer irreducible count for type " + mu.to_string());
  return num / den;
}

std::vector<int> singletons(const NoncrossingPartition& p) {
  std::vector<int> out;
  for (const auto& b : p.blocks())
    if (b.size() == 1) out.push_back(b.front());
  return out;
}

NoncrossingPartition strip_singletons(const NoncrossingPartition& p) {
  std::vector<Block> kept;
  for (const auto& b : p.blocks())
    if (b.size() > 1) kept.push_back(b);
  return NoncrossingPartition(std::move(kept), NoncrossingPartition::Canonical{});
}

NoncrossingPartition restrict(const NoncrossingPartition& p, std::span<const int> keep) {
  std::set<int> allowed(keep.begin(), keep.end());
  std::vector<Block> blocks;
  for (const auto& b : p.blocks()) {
    Block kept;
    for (int x : b)
      if (allowed.contains(x)) kept.push_back(x);
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  // Minima of the surviving pieces can change order.
  canonicalize(blocks);
  return NoncrossingPartition(std::move(blocks), NoncrossingPartition::Canonical{});
}

bool refines(const NoncrossingPartition& fine, const NoncrossingPartition& coarse) {
  if (fine.ground() != coarse.ground())
    throw std::domain_error("refinement compares partitions of different sets");
  for (const auto& b : fine.blocks()) {
    const int owner = coarse.block_of(b.front());
    for (int x : b)
      if (coarse.block_of(x) != owner) return false;
  }
  return true;
}

std::vector<NoncrossingPartition> irreducible_components(const NoncrossingPartition& p) {
  std::vector<NoncrossingPartition> out;
  const auto elems = p.ground();
  std::size_t start = 0;
  while (start < elems.size()) {
    const auto& block = p.blocks()[static_cast<std::size_t>(p.block_of(elems[start]))];
    const int end_value = block.back();
    std::size_t end = start;
    while (end < elems.size() && elems[end] <= end_value) ++end;
    out.push_back(restrict(p, std::span<const int>(elems.data() + start, end - start)));
    start = end;
  }
  return out;
}

}  // namespace kerovlab
