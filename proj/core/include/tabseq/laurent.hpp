#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tabseq/numeric.hpp"
#include "tabseq/series.hpp"

namespace tabseq {

// Sparse Laurent polynomial in one auxiliary variable.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exponent, Rational coeff = Rational(1));

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  void add_term(int exponent, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent scaled(const Rational& c) const;
  Laurent inverted_variable() const;  // x -> 1/x

  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<Laurent> divided_by(const Laurent& divisor) const;

  Rational sum_positive_exponents() const;
  Rational sum_negative_exponents() const;
  Rational sum_all() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, Rational> terms_;
};

// Truncated series in t whose coefficients are Laurent polynomials in x.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(int order) : coeffs_(static_cast<size_t>(order) + 1), order_(order) {}

  int order() const { return order_; }
  const Laurent& coeff(int n) const;
  Laurent& coeff(int n);

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  bool is_zero() const;

 private:
  std::vector<Laurent> coeffs_;
  int order_ = -1;
};

// Sparse Laurent polynomial in several auxiliary variables.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly monomial(Exponents exps, Rational coeff = Rational(1));
  static MultiPoly constant(int nvars, Rational value);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly inverted_variables() const;  // z_i -> 1/z_i for all i

  // Sum of coefficients over terms whose exponents are all <= bound;
  // this is the coefficient extraction behind 1/(1-z_i) prefix factors.
  Rational sum_dominated_by(int bound) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

// Truncated series in t with MultiPoly coefficients of bounded support.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const MultiPoly& coeff(int n) const;
  MultiPoly& coeff(int n);

 private:
  int nvars_ = 0;
  std::vector<MultiPoly> coeffs_;
  int order_ = -1;
};

enum class DiagonalSelector {
  Full,          // coefficient of (z_1...z_v)^n at t^n
  ConstantTerm,  // constant term in every auxiliary variable
};

UniSeries diagonal(const MultiSeries& f, DiagonalSelector selector = DiagonalSelector::Full,
                   SeriesFlavor flavor = SeriesFlavor::OGF);

}  // namespace tabseq
