#pragma once

#include <optional>
#include <vector>

#include "tabseq/arc_diagram.hpp"
#include "tabseq/tableau.hpp"
#include "tabseq/walks.hpp"

namespace tabseq {

// Row-and-column strictly increasing filling used as insertion state.
class FilledTableau {
 public:
  FilledTableau() = default;
  explicit FilledTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  bool empty() const { return rows_.empty(); }
  int min_entry() const;

  // Classical row insertion (bump the smallest larger entry down a row).
  void insert(int value);
  // Remove the minimum entry at (0,0) and rectify by jeu de taquin; returns
  // the row index of the corner that disappeared.
  int delete_min(int expected_value);
  // Inverse operations, used when reading a tableau sequence backwards.
  int reverse_insert(int added_row);
  void reverse_delete(int corner_row, int value);

  friend bool operator==(const FilledTableau&, const FilledTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Shape sequence -> chamber walk via lambda |-> delta + lambda, padded to k.
LatticeWalk tableau_to_walk(const TableauSequence& seq, int k);
TableauSequence walk_to_tableau(const LatticeWalk& walk,
                                std::optional<TableauKind> kind = std::nullopt);

// Insertion bijection: PartitionType -> Hesitating, MatchingType -> Oscillating.
TableauSequence diagram_to_tableau(const OpenArcDiagram& d, int k);
OpenArcDiagram tableau_to_diagram(const TableauSequence& seq, int k, DiagramKind kind);

// Height <= 2 standard Young tableaux from W_1 oscillating walks: entry j goes
// to the top row for +e_1 and to the second row for -e_1.
FilledTableau syt2_from_walk(const LatticeWalk& walk);
LatticeWalk walk_from_syt2(const FilledTableau& tableau);

}  // namespace tabseq
