#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tabseq/numeric.hpp"
#include "tabseq/partition.hpp"

namespace tabseq {

enum class TableauKind { Oscillating, Hesitating, StandardYoung };

const char* tableau_kind_name(TableauKind kind);
std::optional<TableauKind> tableau_kind_from_name(const std::string& name);

// A sequence of shapes starting from the empty shape.  Oscillating and
// standard Young sequences move one box per step; hesitating sequences are
// built from the move pairs (stay,add), (remove,stay), (add,remove).
struct TableauSequence {
  TableauKind kind = TableauKind::Oscillating;
  std::vector<Partition> shapes;

  int moves() const { return static_cast<int>(shapes.size()) - 1; }
  const Partition& final_shape() const { return shapes.back(); }

  friend bool operator==(const TableauSequence&, const TableauSequence&) = default;
};

struct ValidationResult {
  int max_height = 0;
  Partition final_shape;
};

// Throws Error (IllegalMove / BadPairing / NotFromEmpty) on invalid input.
ValidationResult validate_sequence(const TableauSequence& seq);

using ShapePredicate = std::function<bool(const Partition&)>;

// Exhaustive enumeration of valid sequences with height bound k.  For
// Hesitating, n counts move pairs (2n moves); otherwise n counts moves.
std::vector<TableauSequence> enumerate_tableaux(TableauKind kind, int n, int k,
                                                const ShapePredicate& final_filter = nullptr,
                                                int guard = 8);

// Number of standard Young tableaux with n boxes and at most h rows.
BigInt count_syt_bounded_height(int n, int h);

}  // namespace tabseq
