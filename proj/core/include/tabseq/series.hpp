#pragma once

#include <string>
#include <vector>

#include "tabseq/numeric.hpp"

namespace tabseq {

enum class SeriesFlavor { OGF, EGF };

// Exact-rational truncated power series in t.  Every operation tracks the
// order through which its result is valid; mixing flavors is an error.
class UniSeries {
 public:
  UniSeries() = default;
  UniSeries(int order, SeriesFlavor flavor);
  static UniSeries from_coeffs(std::vector<Rational> coeffs, SeriesFlavor flavor);

  int order() const { return order_; }
  SeriesFlavor flavor() const { return flavor_; }
  const Rational& coeff(int n) const;
  void set_coeff(int n, Rational value);

  UniSeries truncated(int order) const;
  UniSeries derivative() const;

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  UniSeries scaled(const Rational& c) const;

  bool is_zero() const;
  // First order where the two series disagree (within both orders), or -1.
  static int first_mismatch(const UniSeries& a, const UniSeries& b);

 private:
  std::vector<Rational> coeffs_;
  int order_ = -1;
  SeriesFlavor flavor_ = SeriesFlavor::OGF;
};

// Linear differential operator sum_i p_i(t) D_t^i with polynomial coefficients.
struct DiffOperator {
  struct Term {
    std::vector<Rational> poly;  // ascending powers of t
    int derivative_order = 0;
  };
  std::vector<Term> terms;

  int max_derivative_order() const;
};

// Applies the operator exactly; the result is valid to
// f.order() - op.max_derivative_order().
UniSeries apply_operator(const DiffOperator& op, const UniSeries& f);

// The order-5 operator that annihilates the shifted Baxter series
// sum_n B_{n+1} t^n.
DiffOperator baxter_annihilator();

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace tabseq
