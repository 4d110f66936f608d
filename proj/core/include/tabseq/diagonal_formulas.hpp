#pragma once

#include <string>

#include "tabseq/laurent.hpp"
#include "tabseq/series.hpp"

namespace tabseq {

// OGF of W_k oscillating walks from delta to the boundary row, extracted as
// the full diagonal of a rational function in z_1..z_k and t.  The diagonal
// carries a t^{2k-1} shift and the alternant orientation sign
// (-1)^{k(k-1)/2}; both are DP-calibrated and removed here.
UniSeries osc_boundary_diagonal(int k, int N);

// Conjectured OGF of standard Young tableaux of height <= k as a diagonal
// in z_1..z_{k-1} and t.  Supported (count-verified) for k = 2..4.
UniSeries syt_height_diagonal(int k, int N);

// The alternant product Phi_d in z_1..z_{d-1} (Laurent polynomial).
MultiPoly orbit_alternant_product(int d);

struct OrbitReport {
  int d = 0;
  long group_size = 0;
  bool sign_consistent = false;
  bool equal = false;
  MultiPoly difference;
  std::string to_string() const;
};

// Generates the substitution group from its d-1 generators, forms the signed
// orbit sum of z_1...z_{d-1}, and compares it with the alternant product.
OrbitReport orbit_sum_check(int d, int guard = 5);

}  // namespace tabseq
