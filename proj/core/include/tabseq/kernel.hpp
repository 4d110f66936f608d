#pragma once

#include "tabseq/laurent.hpp"
#include "tabseq/series.hpp"

namespace tabseq {

// Quadratic a(x,t) Y^2 + b(x,t) Y + c(x,t) = 0 satisfied by the kernel root Y.
// Its discriminant b^2 - 4ac equals the radical argument
// x^2 - 2tx(1+x)^2 + t^2(x^2-1)^2.
struct KernelQuadratic {
  LaurentSeries a, b, c;
  LaurentSeries discriminant() const;
};

KernelQuadratic kernel_quadratic(int order);

// The printed radical argument, for the discriminant identity check.
LaurentSeries kernel_radical_argument(int order);

// Unique formal-power-series-in-t root of the kernel quadratic (Laurent
// coefficients in x).  Throws NoPowerSeriesRoot if the iteration fails.
LaurentSeries kernel_y(int N);

// G(x,t) = Y/(t(1+x)) * (x^2 - Y^2/x^2 + Y/x^3); division by (1+x) is exact.
LaurentSeries kernel_g(int N);

struct KernelResult {
  UniSeries w;           // H(1;t) - V(1;t)
  UniSeries h1;          // H(1;t): positive-part extraction at x=1
  UniSeries v1;          // V(1;t): negative-part extraction at x=1
  UniSeries w_diagonal;  // same series computed through the diagonal form
  bool used_fallback = false;
};

// The full pipeline; when force_fallback is set (or the series root cannot
// be found) H and V come from quadrant DP counts instead.
KernelResult kernel_w(int N, bool force_fallback = false);

}  // namespace tabseq
