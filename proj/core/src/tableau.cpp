#include "tabseq/tableau.hpp"

#include <algorithm>
#include <map>

#include "tabseq/error.hpp"

namespace tabseq {

const char* tableau_kind_name(TableauKind kind) {
  switch (kind) {
    case TableauKind::Oscillating: return "oscillating";
    case TableauKind::Hesitating: return "hesitating";
    case TableauKind::StandardYoung: return "standard-young";
  }
  return "?";
}

std::optional<TableauKind> tableau_kind_from_name(const std::string& name) {
  if (name == "oscillating") return TableauKind::Oscillating;
  if (name == "hesitating") return TableauKind::Hesitating;
  if (name == "standard-young" || name == "standardYoung") return TableauKind::StandardYoung;
  return std::nullopt;
}

namespace {

enum class Move { Stay, Add, Remove, Illegal };

Move classify_move(const Partition& from, const Partition& to) {
  const int db = to.boxes() - from.boxes();
  if (db == 0 && from == to) return Move::Stay;
  if (db == 1) {
    for (int r : from.addable_rows()) {
      if (from.with_added_box(r) == to) return Move::Add;
    }
  } else if (db == -1) {
    for (int r : from.removable_rows()) {
      if (from.with_removed_box(r) == to) return Move::Remove;
    }
  }
  return Move::Illegal;
}

}  // namespace

ValidationResult validate_sequence(const TableauSequence& seq) {
  if (seq.shapes.empty() || seq.shapes.front().height() != 0) {
    throw Error(ErrorCode::NotFromEmpty, "sequence must start with the empty shape");
  }
  const int moves = seq.moves();
  if (seq.kind == TableauKind::Hesitating && moves % 2 != 0) {
    throw Error(ErrorCode::BadPairing, "hesitating sequences have an even number of moves");
  }
  std::vector<Move> ms;
  ms.reserve(static_cast<size_t>(moves));
  for (int i = 0; i < moves; ++i) {
    const Move m = classify_move(seq.shapes[static_cast<size_t>(i)],
                                 seq.shapes[static_cast<size_t>(i) + 1]);
    if (m == Move::Illegal) {
      throw Error(ErrorCode::IllegalMove, "step " + std::to_string(i + 1) +
                                              " is neither add, remove, nor stay");
    }
    ms.push_back(m);
  }
  switch (seq.kind) {
    case TableauKind::Oscillating:
      for (int i = 0; i < moves; ++i) {
        if (ms[static_cast<size_t>(i)] == Move::Stay) {
          throw Error(ErrorCode::IllegalMove,
                      "oscillating step " + std::to_string(i + 1) + " may not stay");
        }
      }
      break;
    case TableauKind::StandardYoung:
      for (int i = 0; i < moves; ++i) {
        if (ms[static_cast<size_t>(i)] != Move::Add) {
          throw Error(ErrorCode::IllegalMove,
                      "standard Young step " + std::to_string(i + 1) + " must add a box");
        }
      }
      break;
    case TableauKind::Hesitating:
      for (int i = 0; i + 1 < moves; i += 2) {
        const Move a = ms[static_cast<size_t>(i)];
        const Move b = ms[static_cast<size_t>(i) + 1];
        const bool ok = (a == Move::Stay && b == Move::Add) ||
                        (a == Move::Remove && b == Move::Stay) ||
                        (a == Move::Add && b == Move::Remove);
        if (!ok) {
          throw Error(ErrorCode::BadPairing,
                      "moves " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                          " form no hesitating pair");
        }
      }
      break;
  }
  int max_height = 0;
  for (const Partition& p : seq.shapes) max_height = std::max(max_height, p.height());
  return ValidationResult{max_height, seq.shapes.back()};
}

namespace {

void extend_hesitating(TableauSequence& seq, int pairs_left, int k,
                       const ShapePredicate& final_filter, std::vector<TableauSequence>& out) {
  if (pairs_left == 0) {
    if (!final_filter || final_filter(seq.shapes.back())) out.push_back(seq);
    return;
  }
  const Partition cur = seq.shapes.back();
  // (stay, add)
  for (int r : cur.addable_rows(k)) {
    seq.shapes.push_back(cur);
    seq.shapes.push_back(cur.with_added_box(r));
    extend_hesitating(seq, pairs_left - 1, k, final_filter, out);
    seq.shapes.pop_back();
    seq.shapes.pop_back();
  }
  // (remove, stay)
  for (int r : cur.removable_rows()) {
    const Partition next = cur.with_removed_box(r);
    seq.shapes.push_back(next);
    seq.shapes.push_back(next);
    extend_hesitating(seq, pairs_left - 1, k, final_filter, out);
    seq.shapes.pop_back();
    seq.shapes.pop_back();
  }
  // (add, remove)
  for (int r : cur.addable_rows(k)) {
    const Partition mid = cur.with_added_box(r);
    for (int s : mid.removable_rows()) {
      seq.shapes.push_back(mid);
      seq.shapes.push_back(mid.with_removed_box(s));
      extend_hesitating(seq, pairs_left - 1, k, final_filter, out);
      seq.shapes.pop_back();
      seq.shapes.pop_back();
    }
  }
}

void extend_single(TableauSequence& seq, int moves_left, int k, bool allow_remove,
                   const ShapePredicate& final_filter, std::vector<TableauSequence>& out) {
  if (moves_left == 0) {
    if (!final_filter || final_filter(seq.shapes.back())) out.push_back(seq);
    return;
  }
  const Partition cur = seq.shapes.back();
  for (int r : cur.addable_rows(k)) {
    seq.shapes.push_back(cur.with_added_box(r));
    extend_single(seq, moves_left - 1, k, allow_remove, final_filter, out);
    seq.shapes.pop_back();
  }
  if (allow_remove) {
    for (int r : cur.removable_rows()) {
      seq.shapes.push_back(cur.with_removed_box(r));
      extend_single(seq, moves_left - 1, k, allow_remove, final_filter, out);
      seq.shapes.pop_back();
    }
  }
}

}  // namespace

std::vector<TableauSequence> enumerate_tableaux(TableauKind kind, int n, int k,
                                                const ShapePredicate& final_filter, int guard) {
  if (n < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "n and k must be nonnegative");
  if (n > guard) {
    throw Error(ErrorCode::GuardExceeded,
                "enumerate_tableaux guard " + std::to_string(guard) + " exceeded by n=" +
                    std::to_string(n));
  }
  std::vector<TableauSequence> out;
  TableauSequence seq{kind, {Partition{}}};
  if (kind == TableauKind::Hesitating) {
    extend_hesitating(seq, n, k, final_filter, out);
  } else {
    extend_single(seq, n, k, kind == TableauKind::Oscillating, final_filter, out);
  }
  return out;
}

BigInt count_syt_bounded_height(int n, int h) {
  if (n < 0 || h < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 0 and h >= 1");
  std::map<Partition, BigInt> cur;
  cur[Partition{}] = 1;
  for (int step = 0; step < n; ++step) {
    std::map<Partition, BigInt> next;
    for (const auto& [shape, count] : cur) {
      for (int r : shape.addable_rows(h)) {
        next[shape.with_added_box(r)] += count;
      }
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [shape, count] : cur) total += count;
  return total;
}

}  // namespace tabseq
