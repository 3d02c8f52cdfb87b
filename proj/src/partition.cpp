#include "kerovlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kerovlab {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::domain_error("integer partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw std::domain_error("empty part in partition: " + text);
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::domain_error("bad partition: " + text);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::domain_error("bad partition: " + text);
    parts.push_back(value);
  }
  return IntegerPartition(std::move(parts));
}

int IntegerPartition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Integer IntegerPartition::multiplicity_factorial() const {
  Integer out = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

IntegerPartition IntegerPartition::without_ones() const {
  std::vector<int> kept;
  for (int p : parts_)
    if (p > 1) kept.push_back(p);
  return IntegerPartition(std::move(kept));
}

IntegerPartition IntegerPartition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    for (int c = 1; c <= parts_.front(); ++c) {
      int rows = 0;
      for (int p : parts_)
        if (p >= c) ++rows;
      out.push_back(rows);
    }
  }
  return IntegerPartition(std::move(out));
}

std::string IntegerPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<IntegerPartition> integer_partitions(int n, int max_parts) {
  if (n < 0) throw std::domain_error("negative partition size");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) >= max_parts) return;
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace kerovlab
