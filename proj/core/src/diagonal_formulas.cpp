#include "tabseq/diagonal_formulas.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "tabseq/error.hpp"

namespace tabseq {

namespace {

using Exps = MultiPoly::Exponents;

Exps unit(int nv, int i, int p = 1) {
  Exps e(static_cast<size_t>(nv), 0);
  e[static_cast<size_t>(i)] = p;
  return e;
}

MultiPoly binomial_term(int nv, const Exps& a, const Exps& b) {
  // monomial(a) - monomial(b)
  MultiPoly p(nv);
  p.add_term(a, 1);
  p.add_term(b, -1);
  return p;
}

Exps merged(const Exps& a, const Exps& b) {
  Exps out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// (z_1+1) (z_3 z_4^2...z_k^{k-2}) prod_{j<i}(z_i-z_j)(z_i z_j-1) prod_{i>=2}(z_i^2-1)
MultiPoly osc_numerator(int k) {
  Exps lead(static_cast<size_t>(k), 0);
  for (int v = 3; v <= k; ++v) lead[static_cast<size_t>(v) - 1] = v - 2;
  MultiPoly out = MultiPoly::monomial(lead);
  out = out * binomial_term(k, unit(k, 0), Exps(static_cast<size_t>(k), 0));  // z_1 + 1
  Exps zero(static_cast<size_t>(k), 0);
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      out = out * binomial_term(k, unit(k, i), unit(k, j));
      out = out * binomial_term(k, merged(unit(k, i), unit(k, j)), zero);
    }
  }
  for (int i = 1; i < k; ++i) {
    out = out * binomial_term(k, unit(k, i, 2), zero);
  }
  return out;
}

MultiPoly osc_step_sum(int k) {
  MultiPoly s(k);
  for (int i = 0; i < k; ++i) {
    s.add_term(unit(k, i, 1), 1);
    s.add_term(unit(k, i, -1), 1);
  }
  return s;
}

}  // namespace

UniSeries osc_boundary_diagonal(int k, int N) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1");
  const int shift = 2 * k - 1;
  MultiSeries f(k, N + shift);
  const MultiPoly step = osc_step_sum(k);
  MultiPoly zstep = MultiPoly::monomial(Exps(static_cast<size_t>(k), 1)) * step;
  MultiPoly cur = osc_numerator(k);
  for (int j = 0; shift + j <= N + shift; ++j) {
    f.coeff(shift + j) = cur;
    if (shift + j < N + shift) cur = cur * zstep;
  }
  const UniSeries raw = diagonal(f);
  // remove the t^{2k-1} shift and the alternant orientation sign
  const bool negate = (k * (k - 1) / 2) % 2 == 1;
  UniSeries out(N, SeriesFlavor::OGF);
  for (int n = 0; n <= N; ++n) {
    out.set_coeff(n, negate ? -raw.coeff(n + shift) : raw.coeff(n + shift));
  }
  return out;
}

MultiPoly orbit_alternant_product(int d) {
  const int nv = d - 1;
  if (nv < 1) throw Error(ErrorCode::InvalidArgument, "need d >= 2");
  Exps zero(static_cast<size_t>(nv), 0);
  MultiPoly out = binomial_term(nv, merged(unit(nv, 0), unit(nv, nv - 1)), zero);
  for (int j = 1; j <= d - 2; ++j) {
    out = out * binomial_term(nv, merged(unit(nv, 0), unit(nv, j - 1)), unit(nv, j));
  }
  for (int j = 2; j <= d - 1; ++j) {
    out = out * binomial_term(nv, merged(unit(nv, nv - 1), unit(nv, j - 1)), unit(nv, j - 2));
  }
  for (int j = 1; j <= d - 3; ++j) {
    for (int l = j + 2; l <= d - 1; ++l) {
      out = out * binomial_term(nv, merged(unit(nv, j), unit(nv, l - 2)),
                                merged(unit(nv, j - 1), unit(nv, l - 1)));
    }
  }
  // divide by (z_1...z_{d-1})^{d-1}
  MultiPoly shifted(nv);
  for (const auto& [e, c] : out.terms()) {
    Exps ne = e;
    for (int& x : ne) x -= d - 1;
    shifted.add_term(ne, c);
  }
  return shifted;
}

UniSeries syt_height_diagonal(int k, int N) {
  if (k < 2 || k > 4) {
    throw Error(ErrorCode::InvalidArgument,
                "syt_height_diagonal is count-verified for k = 2..4 only");
  }
  const int nv = k - 1;
  // S = zbar_1 + sum_{i=2..k-1} zbar_i z_{i-1} + z_{k-1}
  MultiPoly step(nv);
  step.add_term(unit(nv, 0, -1), 1);
  for (int i = 2; i <= k - 1; ++i) {
    step.add_term(merged(unit(nv, i - 1, -1), unit(nv, i - 2)), 1);
  }
  step.add_term(unit(nv, nv - 1), 1);

  const MultiPoly zprod = MultiPoly::monomial(Exps(static_cast<size_t>(nv), 1));
  const MultiPoly zstep = zprod * step;
  MultiPoly cur = zprod * orbit_alternant_product(k).inverted_variables();
  UniSeries out(N, SeriesFlavor::OGF);
  for (int n = 0; n <= N; ++n) {
    // diagonal of cur / ((1-z_1)...(1-z_{k-1})) at z^(n,...,n): the geometric
    // factors turn the extraction into a dominated-coefficient sum
    out.set_coeff(n, cur.sum_dominated_by(n));
    if (n < N) cur = cur * zstep;
  }
  return out;
}

namespace {

// A substitution group element: the image of each variable, as a monomial
// exponent matrix (row i = exponents of the image of z_i).
using Elem = std::vector<Exps>;

Elem identity_elem(int nv) {
  Elem e;
  for (int i = 0; i < nv; ++i) e.push_back(unit(nv, i));
  return e;
}

// (a after b): substitute a's images into b's monomials.
Elem compose(const Elem& a, const Elem& b, int nv) {
  Elem out;
  out.reserve(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    Exps acc(static_cast<size_t>(nv), 0);
    for (int var = 0; var < nv; ++var) {
      const int p = b[static_cast<size_t>(i)][static_cast<size_t>(var)];
      if (p == 0) continue;
      for (int t = 0; t < nv; ++t) {
        acc[static_cast<size_t>(t)] += p * a[static_cast<size_t>(var)][static_cast<size_t>(t)];
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Elem> orbit_generators(int d) {
  const int nv = d - 1;
  std::vector<Elem> gens;
  for (int g = 1; g <= d - 1; ++g) {
    Elem e = identity_elem(nv);
    Exps img(static_cast<size_t>(nv), 0);
    img[static_cast<size_t>(g) - 1] = -1;
    if (g == 1) {
      if (nv >= 2) img[1] += 1;                       // zbar_1 z_2
    } else if (g == d - 1) {
      img[static_cast<size_t>(g) - 2] += 1;           // z_{d-2} zbar_{d-1}
    } else {
      img[static_cast<size_t>(g) - 2] += 1;           // z_{g-1} zbar_g z_{g+1}
      img[static_cast<size_t>(g)] += 1;
    }
    e[static_cast<size_t>(g) - 1] = img;
    gens.push_back(std::move(e));
  }
  return gens;
}

}  // namespace

std::string OrbitReport::to_string() const {
  std::ostringstream os;
  os << "d=" << d << ": group size " << group_size << ", sign "
     << (sign_consistent ? "consistent" : "INCONSISTENT") << ", identity "
     << (equal ? "holds" : "FAILS");
  return os.str();
}

OrbitReport orbit_sum_check(int d, int guard) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "need d >= 2");
  if (d > guard) {
    throw Error(ErrorCode::GroupClosureOverflow,
                "orbit_sum_check guard " + std::to_string(guard) + " exceeded");
  }
  const int nv = d - 1;
  const auto gens = orbit_generators(d);
  std::map<Elem, int> seen;  // element -> sign
  seen[identity_elem(nv)] = +1;
  std::vector<Elem> frontier{identity_elem(nv)};
  bool consistent = true;
  long limit = 1;
  for (int i = 2; i <= d; ++i) limit *= i;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& el : frontier) {
      const int sign = -seen.at(el);
      for (const Elem& g : gens) {
        Elem ne = compose(g, el, nv);
        auto it = seen.find(ne);
        if (it != seen.end()) {
          if (it->second != sign) consistent = false;
        } else {
          if (static_cast<long>(seen.size()) >= 2 * limit) {
            throw Error(ErrorCode::GroupClosureOverflow, "group closure exceeded expected size");
          }
          seen.emplace(ne, sign);
          next.push_back(std::move(ne));
        }
      }
    }
    frontier = std::move(next);
  }
  // signed orbit sum of z_1...z_{d-1}
  MultiPoly lhs(nv);
  for (const auto& [el, sign] : seen) {
    Exps acc(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) {
      for (int t = 0; t < nv; ++t) {
        acc[static_cast<size_t>(t)] += el[static_cast<size_t>(i)][static_cast<size_t>(t)];
      }
    }
    lhs.add_term(acc, sign);
  }
  const MultiPoly rhs = orbit_alternant_product(d);
  OrbitReport report;
  report.d = d;
  report.group_size = static_cast<long>(seen.size());
  report.sign_consistent = consistent;
  report.difference = lhs - rhs;
  report.equal = report.difference.is_zero() && consistent;
  return report;
}

}  // namespace tabseq
