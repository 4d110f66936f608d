#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabseq/numeric.hpp"

namespace tabseq {

enum class StepModel { OscillatingPM, HesitatingPairs, PositiveOnly };
enum class Chamber { Weyl, Quadrant };

const char* step_model_name(StepModel model);
std::optional<StepModel> step_model_from_name(const std::string& name);

using Point = std::vector<int>;

// delta = (k, k-1, ..., 1), the canonical start point in W_k.
Point delta_point(int k);
bool in_chamber(const Point& p, Chamber chamber);

// One half-step: stay, or +-e_coord.
struct Step {
  bool stay = true;
  int coord = 0;
  int dir = 0;

  static Step make_stay() { return Step{}; }
  static Step unit(int coord, int dir) { return Step{false, coord, dir}; }

  friend bool operator==(const Step&, const Step&) = default;
};

struct LatticeWalk {
  Point start;
  std::vector<Step> steps;

  std::vector<Point> points() const;
  Point end() const;

  friend bool operator==(const LatticeWalk&, const LatticeWalk&) = default;
};

struct Endpoint {
  enum class Kind { Point, BoundaryRow, Anywhere };
  Kind kind = Kind::Anywhere;
  Point point;

  static Endpoint at(Point p) { return {Kind::Point, std::move(p)}; }
  static Endpoint boundary_row() { return {Kind::BoundaryRow, {}}; }
  static Endpoint anywhere() { return {Kind::Anywhere, {}}; }
};

// Exact endpoint distribution after n steps (pairs for HesitatingPairs).
std::map<Point, BigInt> endpoint_counts(StepModel model, Chamber chamber, const Point& start,
                                        int n);

BigInt count_walks(StepModel model, Chamber chamber, const Point& start, int n,
                   const Endpoint& end);

std::vector<LatticeWalk> enumerate_walks(StepModel model, Chamber chamber, const Point& start,
                                         int n, const Endpoint& end, int pair_guard = 8,
                                         int step_guard = 12);

// q_k(lambda, mu, n): hesitating walks of length 2n in the quadrant Q_k.
BigInt quadrant_count(int k, const Point& lambda, const Point& mu, int n);

// Signed reflection sum over coordinate permutations of mu; equals the
// chamber count and must be nonnegative.
BigInt reflection_count(int k, const Point& lambda, const Point& mu, int n);

struct CountTable {
  struct Row {
    int k;
    StepModel model;
    int n;
    Point endpoint;
    BigInt count;
  };
  std::vector<Row> rows;

  std::string to_csv() const;
};

CountTable count_table(StepModel model, Chamber chamber, int k, int n_max);

}  // namespace tabseq
