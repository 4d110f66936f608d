#include "tabseq/bessel.hpp"

#include <sstream>
#include <vector>

#include "tabseq/error.hpp"

namespace tabseq {

UniSeries bessel_series(int j, int N) {
  const int jj = j < 0 ? -j : j;  // b_{-j} = b_j
  UniSeries s(N, SeriesFlavor::EGF);
  BigInt nfac = 1, njfac = factorial(jj);
  for (int n = 0; 2 * n + jj <= N; ++n) {
    if (n > 0) {
      nfac *= n;
      njfac *= n + jj;
    }
    s.set_coeff(2 * n + jj, Rational(BigInt(1), nfac * njfac));
  }
  return s;
}

namespace {

// Determinant of a matrix of truncated series by expansion along the first
// remaining row, memoized over column subsets.
UniSeries series_det(const std::vector<std::vector<UniSeries>>& m, int N) {
  const int k = static_cast<int>(m.size());
  if (k == 0) {
    UniSeries one(N, SeriesFlavor::EGF);
    one.set_coeff(0, 1);
    return one;
  }
  std::vector<UniSeries> memo(static_cast<size_t>(1) << k);
  std::vector<bool> have(static_cast<size_t>(1) << k, false);
  // mask = set of still-active columns; row index = k - popcount(mask)
  auto rec = [&](auto&& self, unsigned mask) -> const UniSeries& {
    if (have[mask]) return memo[mask];
    const int row = k - __builtin_popcount(mask);
    UniSeries out(N, SeriesFlavor::EGF);
    if (mask == 0) {
      out.set_coeff(0, 1);
    } else {
      int sign = 1;
      for (int c = 0; c < k; ++c) {
        if (!(mask >> c & 1u)) continue;
        const UniSeries& entry = m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        if (!entry.is_zero()) {
          const UniSeries sub = entry * self(self, mask & ~(1u << c));
          out = sign > 0 ? out + sub : out - sub;
        }
        sign = -sign;
      }
    }
    memo[mask] = std::move(out);
    have[mask] = true;
    return memo[mask];
  };
  return rec(rec, (1u << k) - 1u);
}

void check_integral_counts(const UniSeries& s, const char* what) {
  BigInt nfac = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) nfac *= n;
    const Rational counts = s.coeff(n) * nfac;
    if (denominator(counts) != 1 || counts < 0) {
      throw Error(ErrorCode::NonIntegralCoefficient,
                  std::string(what) + ": n! [t^n] is not a nonnegative integer at n=" +
                      std::to_string(n));
    }
  }
}

}  // namespace

UniSeries syt_egf_det(int k, int N) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1");
  std::vector<std::vector<UniSeries>> m(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      m[static_cast<size_t>(i) - 1].push_back(bessel_series(i - j, N) +
                                              bessel_series(i + j - 1, N));
    }
  }
  UniSeries det = series_det(m, N);
  check_integral_counts(det, "syt_egf_det");
  return det;
}

UniSeries osc_boundary_egf(int k, int N) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1");
  UniSeries total(N, SeriesFlavor::EGF);
  // lambda = delta; mu = delta + m e_1.  Terms with m > N start above t^N.
  for (int m = 0; m <= N; ++m) {
    std::vector<std::vector<UniSeries>> mat(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
      const int mu = i == 1 ? k + m : k + 1 - i;
      for (int j = 1; j <= k; ++j) {
        const int lam = k + 1 - j;
        mat[static_cast<size_t>(i) - 1].push_back(bessel_series(mu - lam, N) -
                                                  bessel_series(mu + lam, N));
      }
    }
    total = total + series_det(mat, N);
  }
  check_integral_counts(total, "osc_boundary_egf");
  return total;
}

std::string ConjectureReport::to_string() const {
  std::ostringstream os;
  os << "k=" << k << " order=" << order << ": " << (agree ? "agree" : "disagree");
  if (!agree) os << " (first mismatch at n=" << first_mismatch << ")";
  return os.str();
}

ConjectureReport conjecture_check(int k, int N, int guard) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1");
  if (k > guard) {
    throw Error(ErrorCode::GuardExceeded, "conjecture_check guard " + std::to_string(guard) +
                                              " exceeded");
  }
  const UniSeries osc = osc_boundary_egf(k, N);
  const UniSeries syt = syt_egf_det(k, N);
  ConjectureReport report;
  report.k = k;
  report.order = N;
  report.first_mismatch = UniSeries::first_mismatch(osc, syt);
  report.agree = report.first_mismatch < 0;
  return report;
}

}  // namespace tabseq
