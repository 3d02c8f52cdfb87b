// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; runtime limits are wall-clock seconds.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "kerovlab/characters.hpp"
#include "kerovlab/errors.hpp"
#include "kerovlab/irrorder.hpp"
#include "kerovlab/kerov.hpp"
#include "kerovlab/perms.hpp"
#include "kerovlab/symfunc.hpp"
#include "oracles.hpp"

using namespace kerovlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    detail += (ok ? "" : "; ") + why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    std::ostringstream why;
    why << "runtime " << secs << " s exceeds " << limit_s << " s";
    o.fail(why.str());
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s";
  if (limit_s > 0) line << ", limit " << limit_s << " s";
  line << ")";
  if (!o.ok) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

SymFunction expansion(Basis b, Rational c111, Rational c21, Rational c3) {
  SymFunction f(b, 3);
  f.add({1, 1, 1}, c111);
  f.add({2, 1}, c21);
  f.add({3}, c3);
  return f;
}

}  // namespace

int main() {
  criterion(1, "Catalan counts of NC_n and NC_{n+1}^irr", 10, [](Outcome& o) {
    for (int n = 1; n <= 12; ++n)
      if (Integer(enumerate_nc(n).size()) != catalan(n)) o.fail("|NC_" + std::to_string(n) + "|");
    for (int n = 1; n <= 11; ++n)
      if (Integer(enumerate_nc_irr(n + 1).size()) != catalan(n)) o.fail("|NC_irr_" + std::to_string(n + 1) + "|");
  });

  criterion(2, "irreducible counts by type match brute force", 10, [](Outcome& o) {
    for (int n = 1; n <= 9; ++n) {
      std::map<IntegerPartition, Integer> brute;
      for (const auto& p : oracle::noncrossing(n))
        if (oracle::same_block(p, 1, n)) ++brute[oracle::type(p)];
      for (const auto& mu : integer_partitions(n))
        if (count_nc_irr_by_type(mu) != brute[mu]) o.fail("mu = " + mu.to_string());
    }
  });

  criterion(3, "upper set sizes 2^(l-1) and l-1 covers", 0, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n)
      for (const auto& tau : enumerate_nc_irr(n)) {
        const std::size_t l = static_cast<std::size_t>(tau.num_blocks());
        if (upper_set(tau).size() != (std::size_t{1} << (l - 1))) o.fail("upper set of " + tau.to_string());
        if (covers(tau).size() != l - 1) o.fail("covers of " + tau.to_string());
      }
  });

  criterion(4, "lower covers from T_w and |T_w| = sum C(|A|-1,2)", 0, [](Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
      const auto all = enumerate_nc_irr(n);
      std::map<NoncrossingPartition, std::set<NoncrossingPartition>> lower;
      for (const auto& tau : all)
        for (const auto& pi : covers(tau)) lower[pi].insert(tau);
      for (const auto& pi : all) {
        const auto w = biane(pi);
        const auto tw = t_w_set(w);
        std::set<NoncrossingPartition> from_t;
        for (const auto& [a, b] : tw) {
          const auto tau = biane_inverse(w * Permutation::transposition(n, a, b));
          if (!tau) {
            o.fail("wt outside the interval for " + pi.to_string());
            continue;
          }
          from_t.insert(*tau);
        }
        if (from_t != lower[pi]) o.fail("lower covers of " + pi.to_string());
        Integer expected = 0;
        for (const auto& blk : pi.blocks()) expected += binomial(static_cast<long>(blk.size()) - 1, 2);
        if (Integer(tw.size()) != expected) o.fail("|T_w| for " + pi.to_string());
      }
    }
  });

  criterion(5, "Min/Max inclusion and injectivity on NC_7^irr; worked example", 0, [](Outcome& o) {
    for (const auto& tau : enumerate_nc_irr(7)) {
      for (const auto& pi : upper_set(tau))
        if (!min_max_inclusion(tau, pi)) o.fail("inclusion " + tau.to_string() + " <= " + pi.to_string());
      if (!min_max_injective(tau)) o.fail("injectivity at " + tau.to_string());
    }
    const auto w = biane(NoncrossingPartition::parse("{1,2,10}{3}{4}{5,6,7}{8,9}"));
    if (foata_min(w).word_string() != "8 9 5 6 7 4 3 1 2 10") o.fail("w-check = " + foata_min(w).word_string());
    if (foata_max(w).word_string() != "3 4 7 6 5 9 8 10 2 1") o.fail("w-hat = " + foata_max(w).word_string());
  });

  criterion(6, "four routes agree (irr = nc = stanley for k <= 8, boolean for k <= 6)", 60, [](Outcome& o) {
    for (int k = 1; k <= 8; ++k) {
      const auto a = sigma_irr(k);
      if (sigma_nc(k) != a) o.fail("nc differs at k = " + std::to_string(k));
      if (sigma_stanley(k) != a) o.fail("stanley differs at k = " + std::to_string(k));
      if (k <= 6 && sigma_boolean(k) != a) o.fail("boolean differs at k = " + std::to_string(k));
    }
  });

  criterion(7, "known table Sigma_1..Sigma_6", 0, [](Outcome& o) {
    const std::vector<std::string> known = {
        "R_2", "R_3", "R_4 + R_2", "R_5 + 5·R_3", "R_6 + 15·R_4 + 5·R_2^2 + 8·R_2",
        "R_7 + 35·R_5 + 35·R_3·R_2 + 84·R_3"};
    for (int k = 1; k <= 6; ++k)
      for (auto m : {KerovMethod::irr, KerovMethod::nc, KerovMethod::stanley, KerovMethod::boolean}) {
        const auto got = sigma(k, m).to_string();
        if (got != known[static_cast<std::size_t>(k - 1)])
          o.fail(std::string(method_name(m)) + " Sigma_" + std::to_string(k) + " = " + got);
      }
  });

  criterion(8, "character identity for |lambda| <= 8, 1 <= k <= |lambda|", 120, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n)
      for (const auto& l : integer_partitions(n))
        for (int k = 1; k <= n; ++k)
          if (!verify_kerov(l, k)) o.fail("lambda = " + l.to_string() + ", k = " + std::to_string(k));
  });

  criterion(9, "g_(3,1,1,1) displayed expansions; specializations for k <= 6", 0, [](Outcome& o) {
    const auto g = g_mu({3, 1, 1, 1});
    const std::vector<std::pair<Basis, SymFunction>> displayed = {
        {Basis::m, expansion(Basis::m, Rational(4, 5), Rational(-3, 5), Rational(4, 5))},
        {Basis::h, expansion(Basis::h, Rational(14, 5), -7, 5)},
        {Basis::e, expansion(Basis::e, Rational(4, 5), -3, 5)},
        {Basis::p, expansion(Basis::p, Rational(5, 3), -1, Rational(2, 15))},
        {Basis::s, expansion(Basis::s, Rational(4, 5), Rational(-7, 5), Rational(14, 5))},
    };
    for (const auto& [b, want] : displayed) {
      const auto got = convert_basis(g, b);
      if (got != want)
        o.fail(std::string(1, basis_letter(b)) + "-basis: expected " + want.to_string() + ", computed " + got.to_string());
    }
    for (int k = 1; k <= 6; ++k) {
      const auto s = sigma_irr(k);
      for (const auto& mu : integer_partitions(k + 1, k))
        if (g_mu(mu).evaluate(content_points(k)) != Rational(s.coefficient(mu.without_ones())))
          o.fail("specialization of g_" + mu.to_string());
    }
  });

  criterion(10, "series identities to order 8; shift law for |lambda| <= 5, j <= 3", 0, [](Outcome& o) {
    if (!series_identities_check(8)) o.fail("series identities");
    for (int n = 0; n <= 5; ++n)
      for (const auto& l : integer_partitions(n))
        for (long j = 0; j <= 3; ++j) {
          const auto base = free_cumulants(l, 8);
          const auto sh = shifted_free_cumulants(l, j, 8);
          for (std::size_t i = 1; i <= 8; ++i)
            if (sh[i] != base[i] + (i == 1 ? Integer(j) : Integer(0))) o.fail("lambda = " + l.to_string());
        }
  });

  criterion(11, "positivity gate", 0, [](Outcome& o) {
    for (int k = 1; k <= 8; ++k)
      for (auto m : {KerovMethod::irr, KerovMethod::nc, KerovMethod::stanley, KerovMethod::boolean})
      {
        const auto s = sigma(k, m);
        for (const auto& [mu, c] : s.terms())
          if (c < 0) o.fail("negative coefficient");
      }
    // the gate itself: a negative or fractional coefficient is a consistency error
    auto rejects = [](const CumulantPolynomial& p) {
      try {
        KerovPolynomial::from_exact(3, p, "gate");
      } catch (const ConsistencyError&) {
        return true;
      }
      return false;
    };
    const auto R4 = CumulantPolynomial::symbol(4), R2 = CumulantPolynomial::symbol(2);
    if (!rejects(R4 - R2) || !rejects(R4 + Rational(1, 2) * R2)) o.fail("gate accepted a bad polynomial");
    const char* argv[] = {"kerovlab", "sigma", "--k", "8", "--method", "all"};
    std::ostringstream out, err;
    if (cli::run(6, argv, out, err) != cli::kOk) o.fail("sigma --k 8 --method all: " + err.str());
  });

  criterion(12, "Bona-Simion realizations for n <= 6, both variants", 0, [](Outcome& o) {
    for (auto v : {BonaSimionVariant::descents, BonaSimionVariant::excedances})
      for (int n = 1; n <= 6; ++n)
        if (!realize_bona_simion(n, v)) o.fail("no realization at n = " + std::to_string(n));
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
