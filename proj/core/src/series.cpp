#include "tabseq/series.hpp"

#include <algorithm>

#include "tabseq/error.hpp"

namespace tabseq {

UniSeries::UniSeries(int order, SeriesFlavor flavor)
    : coeffs_(static_cast<size_t>(order) + 1), order_(order), flavor_(flavor) {
  if (order < 0) throw Error(ErrorCode::OrderUnderflow, "series order must be >= 0");
}

UniSeries UniSeries::from_coeffs(std::vector<Rational> coeffs, SeriesFlavor flavor) {
  if (coeffs.empty()) throw Error(ErrorCode::OrderUnderflow, "need at least one coefficient");
  UniSeries s(static_cast<int>(coeffs.size()) - 1, flavor);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const Rational& UniSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  return coeffs_[static_cast<size_t>(n)];
}

void UniSeries::set_coeff(int n, Rational value) {
  if (n < 0 || n > order_) throw Error(ErrorCode::OrderUnderflow, "coefficient past valid order");
  coeffs_[static_cast<size_t>(n)] = std::move(value);
}

UniSeries UniSeries::truncated(int order) const {
  if (order > order_) throw Error(ErrorCode::OrderUnderflow, "cannot extend a truncated series");
  UniSeries s(order, flavor_);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

UniSeries UniSeries::derivative() const {
  if (order_ < 1) throw Error(ErrorCode::OrderUnderflow, "derivative needs order >= 1");
  UniSeries s(order_ - 1, flavor_);
  for (int n = 1; n <= order_; ++n) {
    s.coeffs_[static_cast<size_t>(n) - 1] = coeffs_[static_cast<size_t>(n)] * n;
  }
  return s;
}

namespace {

void require_same_flavor(const UniSeries& a, const UniSeries& b) {
  if (a.flavor() != b.flavor()) {
    throw Error(ErrorCode::FlavorMismatch, "cannot mix OGF and EGF series");
  }
}

}  // namespace

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  require_same_flavor(a, b);
  UniSeries s(std::min(a.order(), b.order()), a.flavor());
  for (int n = 0; n <= s.order(); ++n) s.set_coeff(n, a.coeff(n) + b.coeff(n));
  return s;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
  require_same_flavor(a, b);
  UniSeries s(std::min(a.order(), b.order()), a.flavor());
  for (int n = 0; n <= s.order(); ++n) s.set_coeff(n, a.coeff(n) - b.coeff(n));
  return s;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  require_same_flavor(a, b);
  UniSeries s(std::min(a.order(), b.order()), a.flavor());
  for (int i = 0; i <= s.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= s.order(); ++j) {
      if (b.coeff(j) == 0) continue;
      s.set_coeff(i + j, s.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return s;
}

UniSeries UniSeries::scaled(const Rational& c) const {
  UniSeries s(order_, flavor_);
  for (int n = 0; n <= order_; ++n) s.set_coeff(n, coeffs_[static_cast<size_t>(n)] * c);
  return s;
}

bool UniSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int UniSeries::first_mismatch(const UniSeries& a, const UniSeries& b) {
  const int upto = std::min(a.order(), b.order());
  for (int n = 0; n <= upto; ++n) {
    if (a.coeff(n) != b.coeff(n)) return n;
  }
  return -1;
}

int DiffOperator::max_derivative_order() const {
  int out = 0;
  for (const Term& t : terms) out = std::max(out, t.derivative_order);
  return out;
}

UniSeries apply_operator(const DiffOperator& op, const UniSeries& f) {
  const int result_order = f.order() - op.max_derivative_order();
  if (result_order < 0) {
    throw Error(ErrorCode::OrderUnderflow, "series order too small for the operator");
  }
  UniSeries out(result_order, f.flavor());
  for (const DiffOperator::Term& term : op.terms) {
    UniSeries df = f;
    for (int d = 0; d < term.derivative_order; ++d) df = df.derivative();
    for (size_t p = 0; p < term.poly.size(); ++p) {
      const Rational& c = term.poly[p];
      if (c == 0) continue;
      for (int n = 0; n + static_cast<int>(p) <= result_order && n <= df.order(); ++n) {
        const int target = n + static_cast<int>(p);
        out.set_coeff(target, out.coeff(target) + c * df.coeff(n));
      }
    }
  }
  return out;
}

DiffOperator baxter_annihilator() {
  auto poly = [](std::initializer_list<long> cs) {
    std::vector<Rational> out;
    for (long c : cs) out.emplace_back(c);
    return out;
  };
  DiffOperator op;
  // t^4 (t+1)(8t-1) = -t^4 + 7 t^5 + 8 t^6
  op.terms.push_back({poly({0, 0, 0, 0, -1, 7, 8}), 5});
  // t^3 (-20 + 147 t + 176 t^2)
  op.terms.push_back({poly({0, 0, 0, -20, 147, 176}), 4});
  // 4 t^2 (-30 + 241 t + 304 t^2)
  op.terms.push_back({poly({0, 0, -120, 964, 1216}), 3});
  // 12 t (-20 + 191 t + 256 t^2)
  op.terms.push_back({poly({0, -240, 2292, 3072}), 2});
  // 24 (-5 + 72 t + 104 t^2)
  op.terms.push_back({poly({-120, 1728, 2496}), 1});
  // 240 + 384 t
  op.terms.push_back({poly({240, 384}), 0});
  return op;
}

std::string rational_to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace tabseq
