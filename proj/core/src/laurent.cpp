#include "tabseq/laurent.hpp"

#include <algorithm>

#include "tabseq/error.hpp"

namespace tabseq {

Laurent Laurent::monomial(int exponent, Rational coeff) {
  Laurent p;
  if (coeff != 0) p.terms_[exponent] = std::move(coeff);
  return p;
}

Rational Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(int exponent, const Rational& coeff) {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[exponent] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no support");
  return terms_.begin()->first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no support");
  return terms_.rbegin()->first;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) {
      out.add_term(e1 + e2, c1 * c2);
    }
  }
  return out;
}

Laurent Laurent::scaled(const Rational& c) const {
  Laurent out;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

Laurent Laurent::inverted_variable() const {
  Laurent out;
  for (const auto& [e, v] : terms_) out.terms_[-e] = v;
  return out;
}

std::optional<Laurent> Laurent::divided_by(const Laurent& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent{};
  // long division from the top; an exact quotient has min exponent
  // this->min - divisor.min, which bounds the loop
  const int quot_min = min_exponent() - divisor.min_exponent();
  const int dlead = divisor.max_exponent();
  const Rational dcoef = divisor.terms_.rbegin()->second;
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const int shift = rem.max_exponent() - dlead;
    if (shift < quot_min) return std::nullopt;
    const Rational factor = rem.terms_.rbegin()->second / dcoef;
    quot.add_term(shift, factor);
    rem = rem - divisor * Laurent::monomial(shift, factor);
  }
  return quot;
}

Rational Laurent::sum_positive_exponents() const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    if (e > 0) out += c;
  }
  return out;
}

Rational Laurent::sum_negative_exponents() const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0) out += c;
  }
  return out;
}

Rational Laurent::sum_all() const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) out += c;
  return out;
}

const Laurent& LaurentSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  return coeffs_[static_cast<size_t>(n)];
}

Laurent& LaurentSeries::coeff(int n) {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  return coeffs_[static_cast<size_t>(n)];
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a.coeff(n) + b.coeff(n);
  return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a.coeff(n) - b.coeff(n);
  return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= out.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeff(i + j) = out.coeff(i + j) + a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

bool LaurentSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Laurent& c) { return c.is_zero(); });
}

MultiPoly MultiPoly::monomial(Exponents exps, Rational coeff) {
  MultiPoly p(static_cast<int>(exps.size()));
  if (coeff != 0) p.terms_[std::move(exps)] = std::move(coeff);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, Rational value) {
  return monomial(Exponents(static_cast<size_t>(nvars), 0), std::move(value));
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "exponent arity mismatch");
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[e] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

namespace {

void require_same_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "variable arity mismatch");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out(a.nvars());
  MultiPoly::Exponents e(static_cast<size_t>(a.nvars()));
  for (const auto& [e1, c1] : a.terms()) {
    for (const auto& [e2, c2] : b.terms()) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

MultiPoly MultiPoly::inverted_variables() const {
  MultiPoly out(nvars_);
  Exponents e(static_cast<size_t>(nvars_));
  for (const auto& [e1, v] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) e[i] = -e1[i];
    out.terms_[e] = v;
  }
  return out;
}

Rational MultiPoly::sum_dominated_by(int bound) const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    if (std::all_of(e.begin(), e.end(), [bound](int x) { return x <= bound; })) out += c;
  }
  return out;
}

MultiSeries::MultiSeries(int nvars, int order)
    : nvars_(nvars), coeffs_(static_cast<size_t>(order) + 1, MultiPoly(nvars)), order_(order) {
  if (order < 0) throw Error(ErrorCode::OrderUnderflow, "series order must be >= 0");
}

const MultiPoly& MultiSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  return coeffs_[static_cast<size_t>(n)];
}

MultiPoly& MultiSeries::coeff(int n) {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  return coeffs_[static_cast<size_t>(n)];
}

UniSeries diagonal(const MultiSeries& f, DiagonalSelector selector, SeriesFlavor flavor) {
  UniSeries out(f.order(), flavor);
  for (int n = 0; n <= f.order(); ++n) {
    const int target = selector == DiagonalSelector::Full ? n : 0;
    MultiPoly::Exponents e(static_cast<size_t>(f.nvars()), target);
    out.set_coeff(n, f.coeff(n).coeff(e));
  }
  return out;
}

}  // namespace tabseq
