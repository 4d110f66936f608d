#include "tabseq/walks.hpp"

#include <algorithm>
#include <sstream>

#include "tabseq/error.hpp"

namespace tabseq {

const char* step_model_name(StepModel model) {
  switch (model) {
    case StepModel::OscillatingPM: return "oscillating";
    case StepModel::HesitatingPairs: return "hesitating";
    case StepModel::PositiveOnly: return "positive";
  }
  return "?";
}

std::optional<StepModel> step_model_from_name(const std::string& name) {
  if (name == "oscillating") return StepModel::OscillatingPM;
  if (name == "hesitating") return StepModel::HesitatingPairs;
  if (name == "positive" || name == "positive-only") return StepModel::PositiveOnly;
  return std::nullopt;
}

Point delta_point(int k) {
  Point p(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = k - i;
  return p;
}

bool in_chamber(const Point& p, Chamber chamber) {
  if (p.empty()) return true;
  if (chamber == Chamber::Weyl) {
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] <= p[i + 1]) return false;
    }
  }
  return p.back() > 0 &&
         (chamber == Chamber::Weyl || std::all_of(p.begin(), p.end(), [](int x) { return x > 0; }));
}

std::vector<Point> LatticeWalk::points() const {
  std::vector<Point> pts{start};
  Point cur = start;
  for (const Step& s : steps) {
    if (!s.stay) cur[static_cast<size_t>(s.coord)] += s.dir;
    pts.push_back(cur);
  }
  return pts;
}

Point LatticeWalk::end() const {
  Point cur = start;
  for (const Step& s : steps) {
    if (!s.stay) cur[static_cast<size_t>(s.coord)] += s.dir;
  }
  return cur;
}

namespace {

// Phases of the hesitating pair grammar between half-steps.
enum Phase : int {
  kPairBoundary = 0,
  kAfterStay = 1,   // next half-step must add
  kAfterPlus = 2,   // next half-step must subtract
  kAfterMinus = 3,  // next half-step must stay
};

void check_start(const Point& start, Chamber chamber) {
  if (start.empty()) throw Error(ErrorCode::DimensionMismatch, "empty start point");
  if (!in_chamber(start, chamber)) {
    throw Error(ErrorCode::StartOutsideChamber, "start point is outside the chamber");
  }
}

std::map<Point, BigInt> step_dp(Chamber chamber, const Point& start, int n, bool plus, bool minus) {
  const int k = static_cast<int>(start.size());
  std::map<Point, BigInt> cur;
  cur[start] = 1;
  for (int s = 0; s < n; ++s) {
    std::map<Point, BigInt> next;
    for (const auto& [p, c] : cur) {
      for (int i = 0; i < k; ++i) {
        if (plus) {
          Point q = p;
          q[static_cast<size_t>(i)] += 1;
          if (in_chamber(q, chamber)) next[q] += c;
        }
        if (minus) {
          Point q = p;
          q[static_cast<size_t>(i)] -= 1;
          if (in_chamber(q, chamber)) next[q] += c;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<Point, BigInt> hesitating_dp(Chamber chamber, const Point& start, int pairs) {
  const int k = static_cast<int>(start.size());
  // state: (phase, point) -> count over half-steps
  std::map<std::pair<int, Point>, BigInt> cur;
  cur[{kPairBoundary, start}] = 1;
  for (int half = 0; half < 2 * pairs; ++half) {
    std::map<std::pair<int, Point>, BigInt> next;
    for (const auto& [state, c] : cur) {
      const auto& [phase, p] = state;
      if (phase == kPairBoundary) {
        next[{kAfterStay, p}] += c;
        for (int i = 0; i < k; ++i) {
          Point q = p;
          q[static_cast<size_t>(i)] += 1;
          if (in_chamber(q, chamber)) next[{kAfterPlus, q}] += c;
          q[static_cast<size_t>(i)] -= 2;
          if (in_chamber(q, chamber)) next[{kAfterMinus, q}] += c;
        }
      } else if (phase == kAfterStay) {
        for (int i = 0; i < k; ++i) {
          Point q = p;
          q[static_cast<size_t>(i)] += 1;
          if (in_chamber(q, chamber)) next[{kPairBoundary, q}] += c;
        }
      } else if (phase == kAfterPlus) {
        for (int j = 0; j < k; ++j) {
          Point q = p;
          q[static_cast<size_t>(j)] -= 1;
          if (in_chamber(q, chamber)) next[{kPairBoundary, q}] += c;
        }
      } else {
        next[{kPairBoundary, p}] += c;
      }
    }
    cur = std::move(next);
  }
  std::map<Point, BigInt> out;
  for (const auto& [state, c] : cur) {
    if (state.first == kPairBoundary) out[state.second] += c;
  }
  return out;
}

bool on_boundary_row(const Point& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  if (p[0] < k) return false;
  for (int i = 1; i < k; ++i) {
    if (p[static_cast<size_t>(i)] != k - i) return false;
  }
  return true;
}

}  // namespace

std::map<Point, BigInt> endpoint_counts(StepModel model, Chamber chamber, const Point& start,
                                        int n) {
  check_start(start, chamber);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative walk length");
  switch (model) {
    case StepModel::HesitatingPairs: return hesitating_dp(chamber, start, n);
    case StepModel::OscillatingPM: return step_dp(chamber, start, n, true, true);
    case StepModel::PositiveOnly: return step_dp(chamber, start, n, true, false);
  }
  return {};
}

BigInt count_walks(StepModel model, Chamber chamber, const Point& start, int n,
                   const Endpoint& end) {
  const auto table = endpoint_counts(model, chamber, start, n);
  const int k = static_cast<int>(start.size());
  BigInt total = 0;
  switch (end.kind) {
    case Endpoint::Kind::Point: {
      if (end.point.size() != start.size()) {
        throw Error(ErrorCode::DimensionMismatch, "endpoint dimension mismatch");
      }
      auto it = table.find(end.point);
      return it == table.end() ? BigInt(0) : it->second;
    }
    case Endpoint::Kind::BoundaryRow:
      for (const auto& [p, c] : table) {
        if (on_boundary_row(p, k)) total += c;
      }
      return total;
    case Endpoint::Kind::Anywhere:
      for (const auto& [p, c] : table) total += c;
      return total;
  }
  return total;
}

namespace {

bool endpoint_matches(const Endpoint& end, const Point& p, int k) {
  switch (end.kind) {
    case Endpoint::Kind::Point: return p == end.point;
    case Endpoint::Kind::BoundaryRow: return on_boundary_row(p, k);
    case Endpoint::Kind::Anywhere: return true;
  }
  return false;
}

void enumerate_single(Chamber chamber, bool minus, const Endpoint& end, int left, Point& cur,
                      std::vector<Step>& steps, const Point& start,
                      std::vector<LatticeWalk>& out) {
  const int k = static_cast<int>(cur.size());
  if (left == 0) {
    if (endpoint_matches(end, cur, k)) out.push_back(LatticeWalk{start, steps});
    return;
  }
  for (int i = 0; i < k; ++i) {
    for (int d = minus ? -1 : 1; d <= 1; d += 2) {
      cur[static_cast<size_t>(i)] += d;
      if (in_chamber(cur, chamber)) {
        steps.push_back(Step::unit(i, d));
        enumerate_single(chamber, minus, end, left - 1, cur, steps, start, out);
        steps.pop_back();
      }
      cur[static_cast<size_t>(i)] -= d;
    }
  }
}

void enumerate_pairs(Chamber chamber, const Endpoint& end, int left, Point& cur,
                     std::vector<Step>& steps, const Point& start, std::vector<LatticeWalk>& out) {
  const int k = static_cast<int>(cur.size());
  if (left == 0) {
    if (endpoint_matches(end, cur, k)) out.push_back(LatticeWalk{start, steps});
    return;
  }
  // (stay, +e_i)
  for (int i = 0; i < k; ++i) {
    cur[static_cast<size_t>(i)] += 1;
    if (in_chamber(cur, chamber)) {
      steps.push_back(Step::make_stay());
      steps.push_back(Step::unit(i, +1));
      enumerate_pairs(chamber, end, left - 1, cur, steps, start, out);
      steps.pop_back();
      steps.pop_back();
    }
    cur[static_cast<size_t>(i)] -= 1;
  }
  // (-e_i, stay)
  for (int i = 0; i < k; ++i) {
    cur[static_cast<size_t>(i)] -= 1;
    if (in_chamber(cur, chamber)) {
      steps.push_back(Step::unit(i, -1));
      steps.push_back(Step::make_stay());
      enumerate_pairs(chamber, end, left - 1, cur, steps, start, out);
      steps.pop_back();
      steps.pop_back();
    }
    cur[static_cast<size_t>(i)] += 1;
  }
  // (+e_i, -e_j)
  for (int i = 0; i < k; ++i) {
    cur[static_cast<size_t>(i)] += 1;
    if (in_chamber(cur, chamber)) {
      for (int j = 0; j < k; ++j) {
        cur[static_cast<size_t>(j)] -= 1;
        if (in_chamber(cur, chamber)) {
          steps.push_back(Step::unit(i, +1));
          steps.push_back(Step::unit(j, -1));
          enumerate_pairs(chamber, end, left - 1, cur, steps, start, out);
          steps.pop_back();
          steps.pop_back();
        }
        cur[static_cast<size_t>(j)] += 1;
      }
    }
    cur[static_cast<size_t>(i)] -= 1;
  }
}

}  // namespace

std::vector<LatticeWalk> enumerate_walks(StepModel model, Chamber chamber, const Point& start,
                                         int n, const Endpoint& end, int pair_guard,
                                         int step_guard) {
  check_start(start, chamber);
  if (model == StepModel::HesitatingPairs ? n > pair_guard : n > step_guard) {
    throw Error(ErrorCode::GuardExceeded, "enumerate_walks guard exceeded by n=" +
                                              std::to_string(n));
  }
  std::vector<LatticeWalk> out;
  Point cur = start;
  std::vector<Step> steps;
  if (model == StepModel::HesitatingPairs) {
    enumerate_pairs(chamber, end, n, cur, steps, start, out);
  } else {
    enumerate_single(chamber, model == StepModel::OscillatingPM, end, n, cur, steps, start, out);
  }
  return out;
}

BigInt quadrant_count(int k, const Point& lambda, const Point& mu, int n) {
  if (static_cast<int>(lambda.size()) != k || static_cast<int>(mu.size()) != k) {
    throw Error(ErrorCode::DimensionMismatch, "quadrant_count expects k coordinates");
  }
  const auto table = endpoint_counts(StepModel::HesitatingPairs, Chamber::Quadrant, lambda, n);
  auto it = table.find(mu);
  return it == table.end() ? BigInt(0) : it->second;
}

BigInt reflection_count(int k, const Point& lambda, const Point& mu, int n) {
  if (!in_chamber(lambda, Chamber::Weyl) || !in_chamber(mu, Chamber::Weyl)) {
    throw Error(ErrorCode::StartOutsideChamber, "reflection sum endpoints must lie in W_k");
  }
  const auto table = endpoint_counts(StepModel::HesitatingPairs, Chamber::Quadrant, lambda, n);
  Point perm = mu;
  std::sort(perm.begin(), perm.end());
  BigInt total = 0;
  do {
    // inversion parity relative to the descending target order
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a) {
      for (size_t b = a + 1; b < perm.size(); ++b) {
        if (perm[a] < perm[b]) ++inv;
      }
    }
    auto it = table.find(perm);
    if (it != table.end()) {
      if (inv % 2 == 0) {
        total += it->second;
      } else {
        total -= it->second;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (total < 0) {
    throw Error(ErrorCode::NegativeResult, "reflection sum came out negative");
  }
  return total;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "k,model,n,endpoint,count\n";
  for (const Row& r : rows) {
    os << r.k << ',' << step_model_name(r.model) << ',' << r.n << ',';
    for (size_t i = 0; i < r.endpoint.size(); ++i) {
      if (i) os << ';';
      os << r.endpoint[i];
    }
    os << ',' << r.count << '\n';
  }
  return os.str();
}

CountTable count_table(StepModel model, Chamber chamber, int k, int n_max) {
  CountTable table;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [p, c] : endpoint_counts(model, chamber, delta_point(k), n)) {
      table.rows.push_back(CountTable::Row{k, model, n, p, c});
    }
  }
  return table;
}

}  // namespace tabseq
