#include "kerovlab/cumulant_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kerovlab {

namespace {

IntegerPartition merge_keys(const IntegerPartition& a, const IntegerPartition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntegerPartition(std::move(parts));
}

}  // namespace

CumulantPolynomial::CumulantPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(IntegerPartition{}, constant);
}

CumulantPolynomial CumulantPolynomial::symbol(int i) {
  if (i < 1) throw std::domain_error("cumulant symbols are R_1, R_2, ...");
  return monomial(IntegerPartition{i});
}

CumulantPolynomial CumulantPolynomial::monomial(const IntegerPartition& key, const Rational& coeff) {
  CumulantPolynomial p;
  p.add_term(key, coeff);
  return p;
}

bool CumulantPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CumulantPolynomial::constant_term() const { return coefficient(IntegerPartition{}); }

Rational CumulantPolynomial::coefficient(const IntegerPartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CumulantPolynomial::add_term(const IntegerPartition& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool CumulantPolynomial::is_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.size() == weight; });
}

Rational CumulantPolynomial::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [key, coeff] : terms_) {
    Rational term = coeff;
    for (int i : key.parts()) {
      if (i >= static_cast<int>(values.size())) {
        term = 0;
        break;
      }
      term *= values[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

CumulantPolynomial CumulantPolynomial::without_r1() const {
  CumulantPolynomial out;
  for (const auto& [key, coeff] : terms_)
    if (key.multiplicity(1) == 0) out.terms_.emplace(key, coeff);
  return out;
}

CumulantPolynomial& CumulantPolynomial::operator+=(const CumulantPolynomial& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

CumulantPolynomial& CumulantPolynomial::operator-=(const CumulantPolynomial& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

CumulantPolynomial& CumulantPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [key, coeff] : terms_) coeff *= scalar;
  }
  return *this;
}

CumulantPolynomial operator*(const CumulantPolynomial& a, const CumulantPolynomial& b) {
  CumulantPolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(merge_keys(ka, kb), ca * cb);
  return out;
}

std::string CumulantPolynomial::to_string() const {
  std::vector<std::pair<IntegerPartition, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return x.first > y.first;
  });
  std::vector<std::pair<Rational, std::string>> rendered;
  for (const auto& [key, coeff] : sorted) rendered.emplace_back(coeff, render_monomial(key));
  return render_sum(rendered);
}

Rational unit_inverse(const Rational& q) {
  if (q == 0) throw std::domain_error("division by zero");
  return 1 / q;
}

CumulantPolynomial unit_inverse(const CumulantPolynomial& p) {
  if (!p.is_constant() || p.is_zero())
    throw std::domain_error("only nonzero constants are invertible in the cumulant ring");
  return CumulantPolynomial(unit_inverse(p.constant_term()));
}

std::string render_monomial(const IntegerPartition& key) {
  std::string out;
  const auto& parts = key.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "·";
    out += "R_" + std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string render_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [coeff, body] = terms[i];
    const bool negative = coeff < 0;
    if (i == 0) {
      if (negative) out += "−";
    } else {
      out += negative ? " − " : " + ";
    }
    const Rational magnitude = abs(coeff);
    if (body.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += magnitude.get_str() + "·" + body;
    }
  }
  return out;
}

}  // namespace kerovlab
