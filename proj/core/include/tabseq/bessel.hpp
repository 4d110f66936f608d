#pragma once

#include <string>

#include "tabseq/series.hpp"

namespace tabseq {

// b_j(t) = sum_{n>=0} t^{2n+j} / (n! (n+j)!), truncated at order N; b_{-j} = b_j.
UniSeries bessel_series(int j, int N);

// EGF for standard Young tableaux of height <= 2k, as the k x k determinant
// det[b_{i-j} + b_{i+j-1}].
UniSeries syt_egf_det(int k, int N);

// EGF for W_k oscillating walks from delta to the boundary row, as the
// m-summed Grabiner-Magyar determinant det[b_{mu_i-lam_j} - b_{mu_i+lam_j}].
UniSeries osc_boundary_egf(int k, int N);

struct ConjectureReport {
  int k = 0;
  int order = 0;
  bool agree = false;
  int first_mismatch = -1;  // order of first disagreement when agree == false
  std::string to_string() const;
};

// Coefficientwise comparison of the two determinant EGFs through order N.
ConjectureReport conjecture_check(int k, int N, int guard = 8);

}  // namespace tabseq
