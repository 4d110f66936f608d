#include "tabseq/kernel.hpp"

#include "tabseq/error.hpp"
#include "tabseq/walks.hpp"

namespace tabseq {

namespace {

Laurent one_plus_x() {
  Laurent p;
  p.add_term(0, 1);
  p.add_term(1, 1);
  return p;
}

}  // namespace

KernelQuadratic kernel_quadratic(int order) {
  if (order < 2) throw Error(ErrorCode::OrderUnderflow, "need order >= 2");
  KernelQuadratic q;
  q.a = LaurentSeries(order);
  q.b = LaurentSeries(order);
  q.c = LaurentSeries(order);
  const Laurent opx = one_plus_x();
  q.a.coeff(1) = opx;                                   // t (1+x)
  q.b.coeff(0) = Laurent::monomial(1, -1);              // -x
  q.b.coeff(1) = opx * opx;                             // + t (1+x)^2
  q.c.coeff(1) = Laurent::monomial(1) * opx;            // t x (1+x)
  return q;
}

LaurentSeries KernelQuadratic::discriminant() const {
  LaurentSeries four_ac = a * c;
  LaurentSeries out = b * b;
  for (int n = 0; n <= out.order() && n <= four_ac.order(); ++n) {
    out.coeff(n) = out.coeff(n) - four_ac.coeff(n).scaled(4);
  }
  return out;
}

LaurentSeries kernel_radical_argument(int order) {
  if (order < 2) throw Error(ErrorCode::OrderUnderflow, "need order >= 2");
  LaurentSeries d(order);
  d.coeff(0) = Laurent::monomial(2);  // x^2
  Laurent t1;                         // -2x(1+x)^2
  t1.add_term(1, -2);
  t1.add_term(2, -4);
  t1.add_term(3, -2);
  d.coeff(1) = t1;
  Laurent t2;                         // (x^2-1)^2
  t2.add_term(4, 1);
  t2.add_term(2, -2);
  t2.add_term(0, 1);
  d.coeff(2) = t2;
  return d;
}

LaurentSeries kernel_y(int N) {
  // fixed point Y = (t(1+x)/x) (Y^2 + (1+x) Y + x); one t-order gained per pass
  const Laurent opx = one_plus_x();
  LaurentSeries pref(N);
  pref.coeff(1) = opx * Laurent::monomial(-1);
  LaurentSeries lin(N);
  lin.coeff(0) = opx;
  LaurentSeries cons(N);
  cons.coeff(0) = Laurent::monomial(1);

  LaurentSeries y(N);
  for (int pass = 0; pass <= N; ++pass) {
    y = pref * (y * y + lin * y + cons);
  }
  // residual of the quadratic must vanish through order N
  const KernelQuadratic q = kernel_quadratic(N);
  const LaurentSeries residual = q.a * (y * y) + q.b * y + q.c;
  if (!residual.is_zero()) {
    throw Error(ErrorCode::NoPowerSeriesRoot, "kernel iteration did not converge");
  }
  // the complementary root is x/Y; Y vanishing at t=0 with nonzero t^1 part
  // makes it 1/t-singular, so the series branch is unique
  if (!y.coeff(0).is_zero() || y.coeff(1).is_zero()) {
    throw Error(ErrorCode::BranchAmbiguous, "unexpected valuation of the kernel root");
  }
  return y;
}

LaurentSeries kernel_g(int N) {
  const LaurentSeries y = kernel_y(N + 1);
  const Laurent opx = one_plus_x();
  // Y / (t (1+x)): shift one t-order down, divide coefficients by (1+x)
  LaurentSeries ypref(N);
  for (int n = 0; n <= N; ++n) {
    auto quot = y.coeff(n + 1).divided_by(opx);
    if (!quot) {
      throw Error(ErrorCode::InternalCorner, "kernel root coefficient not divisible by 1+x");
    }
    ypref.coeff(n) = *quot;
  }
  // x^2 - Y^2/x^2 + Y/x^3
  LaurentSeries inner(N);
  inner.coeff(0) = Laurent::monomial(2);
  const LaurentSeries ytrunc = [&] {
    LaurentSeries t(N);
    for (int n = 0; n <= N; ++n) t.coeff(n) = y.coeff(n);
    return t;
  }();
  const LaurentSeries y2 = ytrunc * ytrunc;
  for (int n = 0; n <= N; ++n) {
    inner.coeff(n) = inner.coeff(n) - y2.coeff(n) * Laurent::monomial(-2) +
                     ytrunc.coeff(n) * Laurent::monomial(-3);
  }
  return ypref * inner;
}

namespace {

UniSeries quadrant_axis_sums(int N, bool horizontal) {
  // H(1;t): endpoints (i,1); V(1;t): endpoints (1,i)
  UniSeries out(N, SeriesFlavor::OGF);
  const Point start{2, 1};
  for (int n = 0; n <= N; ++n) {
    BigInt total = 0;
    for (const auto& [p, c] : endpoint_counts(StepModel::HesitatingPairs, Chamber::Quadrant,
                                              start, n)) {
      if ((horizontal && p[1] == 1) || (!horizontal && p[0] == 1)) total += c;
    }
    out.set_coeff(n, Rational(total));
  }
  return out;
}

// Diagonal form: W(t) = Delta[(G(1/x, xt) - G(x, xt)) / (1-x)].
UniSeries diagonal_form(const LaurentSeries& g, int N) {
  MultiSeries f(1, N);
  for (int n = 0; n <= N; ++n) {
    const Laurent d = g.coeff(n).inverted_variable() - g.coeff(n);
    if (d.is_zero()) continue;
    // coefficient of t^n is (g_n(1/x) - g_n(x)) x^n / (1-x); the geometric
    // factor only needs powers reaching the diagonal exponent x^n
    MultiPoly shifted(1);
    for (const auto& [e, c] : d.terms()) shifted.add_term({e + n}, c);
    MultiPoly geom(1);
    for (int j = 0; j <= -d.min_exponent(); ++j) geom.add_term({j}, 1);
    f.coeff(n) = shifted * geom;
  }
  return diagonal(f, DiagonalSelector::Full, SeriesFlavor::OGF);
}

}  // namespace

KernelResult kernel_w(int N, bool force_fallback) {
  KernelResult result;
  if (!force_fallback) {
    try {
      const LaurentSeries g = kernel_g(N);
      UniSeries h1(N, SeriesFlavor::OGF), v1(N, SeriesFlavor::OGF);
      for (int n = 0; n <= N; ++n) {
        h1.set_coeff(n, g.coeff(n).sum_positive_exponents());
        v1.set_coeff(n, g.coeff(n).sum_negative_exponents());
      }
      result.h1 = h1;
      result.v1 = v1;
      result.w = h1 - v1;
      result.w_diagonal = diagonal_form(g, N);
      if (UniSeries::first_mismatch(result.w, result.w_diagonal) >= 0) {
        throw Error(ErrorCode::InternalCorner, "extraction and diagonal forms disagree");
      }
      return result;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoPowerSeriesRoot) throw;
    }
  }
  result.used_fallback = true;
  result.h1 = quadrant_axis_sums(N, true);
  result.v1 = quadrant_axis_sums(N, false);
  result.w = result.h1 - result.v1;
  result.w_diagonal = result.w;
  return result;
}

}  // namespace tabseq
