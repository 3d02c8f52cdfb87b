#include <algorithm>
#include <set>

#include "doctest.h"
#include "kerovlab/irrorder.hpp"
#include "oracles.hpp"

using namespace kerovlab;

namespace {
NoncrossingPartition P(const std::string& s) { return NoncrossingPartition::parse(s); }
const char* kTreeExample = "{1,2,7,12}{3,5,6}{4}{8,9}{10,11}";

std::vector<NoncrossingPartition> brute_upper(const NoncrossingPartition& tau) {
  std::vector<NoncrossingPartition> out;
  for (const auto& pi : enumerate_nc_irr(tau.ground_size()))
    if (oracle::leq_irr(tau.blocks(), pi.blocks())) out.push_back(pi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NoncrossingPartition> sorted(std::vector<NoncrossingPartition> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("tree of the worked example") {
  const auto tree = build_tree(P(kTreeExample));
  CHECK(tree.labels() == std::vector<int>{3, 4, 8, 10});
  const int four = tree.node_with_label(4);
  const int three = tree.node_with_label(3);
  CHECK(tree.partition.blocks()[static_cast<std::size_t>(four)] == Block{4});
  CHECK(tree.partition.blocks()[static_cast<std::size_t>(three)] == Block{3, 5, 6});
  CHECK(tree.parent[static_cast<std::size_t>(four)] == three);
}

TEST_CASE("tree small cases") {
  CHECK(build_tree(NoncrossingPartition::one_block(5)).labels().empty());
  const auto tree = build_tree(P("{1,4}{2}{3}"));
  CHECK(tree.labels() == std::vector<int>{2, 3});
  for (const auto& e : tree.edges) CHECK(e.parent == 0);
  CHECK_THROWS_AS(build_tree(P("{1,2}{3}")), std::domain_error);
}

TEST_CASE("contract examples") {
  const auto tau = P(kTreeExample);
  CHECK(contract(tau, {3, 8}).to_string() == "{1,2,3,5,6,7,8,9,12}{4}{10,11}");
  CHECK(contract(tau, {}) == tau);
  const auto t3 = contract(tau, {3});
  CHECK(t3.to_string() == "{1,2,3,5,6,7,12}{4}{8,9}{10,11}");
  const auto tree = build_tree(t3);
  CHECK(tree.parent[static_cast<std::size_t>(tree.node_with_label(4))] == 0);
}

TEST_CASE("contract is order independent") {
  for (const auto& tau : enumerate_nc_irr(6)) {
    const auto labels = build_tree(tau).labels();
    const int l = static_cast<int>(labels.size());
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < l; ++i)
        if (mask >> i & 1u) s.push_back(labels[static_cast<std::size_t>(i)]);
      if (s.size() > 3) continue;
      const auto ref = contract(tau, s);
      std::sort(s.begin(), s.end());
      do CHECK(contract_in_order(tau, s) == ref);
      while (std::next_permutation(s.begin(), s.end()));
    }
  }
}

TEST_CASE("leq_irr examples") {
  const auto tau = P("{1,5}{2,3}{4}");
  CHECK(leq_irr(tau, P("{1,2,3,5}{4}")));
  CHECK_FALSE(leq_irr(tau, P("{1,5}{2,3,4}")));
  CHECK(leq_irr(tau, tau));
  const auto c = covers(tau);
  CHECK(std::find(c.begin(), c.end(), P("{1,2,3,5}{4}")) != c.end());
}

TEST_CASE("leq_irr agrees with the definition and with contractions") {
  for (int n = 2; n <= 7; ++n) {
    const auto all = enumerate_nc_irr(n);
    for (const auto& tau : all) {
      std::set<NoncrossingPartition> by_labels;
      if (n <= 6) {
        const auto labels = build_tree(tau).labels();
        for (unsigned mask = 0; mask < (1u << labels.size()); ++mask) {
          std::vector<int> s;
          for (std::size_t i = 0; i < labels.size(); ++i)
            if (mask >> i & 1u) s.push_back(labels[i]);
          by_labels.insert(contract(tau, s));
        }
      }
      for (const auto& pi : all) {
        const bool got = leq_irr(tau, pi);
        CHECK(got == oracle::leq_irr(tau.blocks(), pi.blocks()));
        if (n <= 6) CHECK(got == (by_labels.count(pi) == 1));
      }
    }
  }
}

TEST_CASE("leq_irr is a partial order") {
  const auto all = enumerate_nc_irr(7);
  const std::size_t N = all.size();
  std::vector<std::vector<char>> rel(N, std::vector<char>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) rel[a][b] = leq_irr(all[a], all[b]);
  bool ok = true;
  for (std::size_t a = 0; a < N; ++a) {
    ok &= rel[a][a] == 1;
    for (std::size_t b = 0; b < N; ++b) {
      if (a != b && rel[a][b] && rel[b][a]) ok = false;
      if (!rel[a][b]) continue;
      for (std::size_t c = 0; c < N; ++c)
        if (rel[b][c] && !rel[a][c]) ok = false;
    }
  }
  CHECK(ok);
}

TEST_CASE("upper_set and covers") {
  auto up = upper_set(P("{1,4}{2}{3}"));
  CHECK(sorted(up) == sorted({P("{1,4}{2}{3}"), P("{1,2,4}{3}"), P("{1,3,4}{2}"), P("{1,2,3,4}")}));
  CHECK(upper_set(NoncrossingPartition::one_block(4)) == std::vector{NoncrossingPartition::one_block(4)});
  CHECK(covers(NoncrossingPartition::one_block(4)).empty());

  for (int n = 2; n <= 8; ++n) {
    for (const auto& tau : enumerate_nc_irr(n)) {
      const auto u = upper_set(tau);
      const int l = tau.num_blocks();
      CHECK(u.size() == (std::size_t{1} << (l - 1)));
      const auto cv = covers(tau);
      CHECK(static_cast<int>(cv.size()) == l - 1);
      if (n <= 7) CHECK(sorted(u) == brute_upper(tau));
      for (const auto& pi : cv) {
        CHECK(leq_irr(tau, pi));
        CHECK(pi.num_blocks() == l - 1);
        int merged = 0;
        for (const auto& b : pi.blocks())
          if (std::find(tau.blocks().begin(), tau.blocks().end(), b) == tau.blocks().end()) ++merged;
        CHECK(merged == 1);
      }
      // covers are exactly the minimal strict upper elements
      for (const auto& pi : u) {
        if (pi == tau) continue;
        bool minimal = true;
        for (const auto& rho : u)
          if (rho != tau && rho != pi && leq_irr(rho, pi)) minimal = false;
        CHECK(minimal == (std::find(cv.begin(), cv.end(), pi) != cv.end()));
      }
    }
  }
}
