#include "tabseq/bijection.hpp"

#include <algorithm>
#include <map>

#include "tabseq/error.hpp"

namespace tabseq {

FilledTableau::FilledTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size())) {
      throw Error(ErrorCode::InvalidArgument, "rows must be nonempty with weakly decreasing length");
    }
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) {
        throw Error(ErrorCode::InvalidArgument, "rows must increase strictly");
      }
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) {
        throw Error(ErrorCode::InvalidArgument, "columns must increase strictly");
      }
    }
  }
}

Partition FilledTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int FilledTableau::min_entry() const {
  if (rows_.empty()) throw Error(ErrorCode::InvalidArgument, "empty tableau has no entries");
  return rows_[0][0];
}

void FilledTableau::insert(int value) {
  int v = value;
  for (size_t r = 0;; ++r) {
    if (r == rows_.size()) {
      rows_.push_back({v});
      return;
    }
    auto& row = rows_[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return;
    }
    std::swap(*it, v);
  }
}

int FilledTableau::delete_min(int expected_value) {
  if (rows_.empty() || rows_[0][0] != expected_value) {
    throw Error(ErrorCode::InternalCorner,
                "entry " + std::to_string(expected_value) + " is not the minimum");
  }
  size_t r = 0, c = 0;
  while (true) {
    const bool has_right = c + 1 < rows_[r].size();
    const bool has_below = r + 1 < rows_.size() && c < rows_[r + 1].size();
    if (!has_right && !has_below) break;
    if (!has_below || (has_right && rows_[r][c + 1] < rows_[r + 1][c])) {
      rows_[r][c] = rows_[r][c + 1];
      ++c;
    } else {
      rows_[r][c] = rows_[r + 1][c];
      ++r;
    }
  }
  rows_[r].pop_back();
  if (rows_[r].empty()) rows_.erase(rows_.begin() + static_cast<long>(r));
  return static_cast<int>(r);
}

int FilledTableau::reverse_insert(int added_row) {
  const size_t r0 = static_cast<size_t>(added_row);
  if (r0 >= rows_.size() || rows_[r0].empty()) {
    throw Error(ErrorCode::InternalCorner, "no cell to reverse-insert from");
  }
  int v = rows_[r0].back();
  rows_[r0].pop_back();
  if (rows_[r0].empty()) rows_.erase(rows_.begin() + static_cast<long>(r0));
  for (size_t r = r0; r-- > 0;) {
    auto& row = rows_[r];
    // bump back up: the largest entry smaller than v
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.begin()) throw Error(ErrorCode::InternalCorner, "reverse insertion stuck");
    --it;
    std::swap(*it, v);
  }
  return v;
}

void FilledTableau::reverse_delete(int corner_row, int value) {
  // re-grow the corner, slide the hole back to (0,0), place the value there
  const size_t r0 = static_cast<size_t>(corner_row);
  if (r0 > rows_.size()) throw Error(ErrorCode::InternalCorner, "corner row out of range");
  size_t r = r0, c;
  if (r0 == rows_.size()) {
    rows_.push_back({0});
    c = 0;
  } else {
    rows_[r0].push_back(0);
    c = rows_[r0].size() - 1;
  }
  while (r > 0 || c > 0) {
    const bool has_up = r > 0;
    const bool has_left = c > 0;
    int up = has_up ? rows_[r - 1][c] : 0;
    int left = has_left ? rows_[r][c - 1] : 0;
    if (!has_up || (has_left && left > up)) {
      rows_[r][c] = left;
      --c;
    } else {
      rows_[r][c] = up;
      --r;
    }
  }
  rows_[0][0] = value;
}

LatticeWalk tableau_to_walk(const TableauSequence& seq, int k) {
  const ValidationResult info = validate_sequence(seq);
  if (info.max_height > k) {
    throw Error(ErrorCode::HeightExceedsK, "sequence reaches height " +
                                               std::to_string(info.max_height));
  }
  auto to_point = [k](const Partition& p) {
    Point out(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<size_t>(i)] = p.part(i) + (k - i);
    return out;
  };
  LatticeWalk walk;
  walk.start = to_point(seq.shapes.front());
  for (size_t s = 0; s + 1 < seq.shapes.size(); ++s) {
    const Point a = to_point(seq.shapes[s]);
    const Point b = to_point(seq.shapes[s + 1]);
    int coord = -1;
    for (int i = 0; i < k; ++i) {
      if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) {
        coord = i;
        break;
      }
    }
    if (coord < 0) {
      walk.steps.push_back(Step::make_stay());
    } else {
      walk.steps.push_back(Step::unit(coord, b[static_cast<size_t>(coord)] -
                                                 a[static_cast<size_t>(coord)]));
    }
  }
  return walk;
}

TableauSequence walk_to_tableau(const LatticeWalk& walk, std::optional<TableauKind> kind) {
  const int k = static_cast<int>(walk.start.size());
  if (walk.start != delta_point(k)) {
    throw Error(ErrorCode::StartOutsideChamber, "walk must start at delta");
  }
  auto to_shape = [k](const Point& p) {
    std::vector<int> parts(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      const int v = p[static_cast<size_t>(i)] - (k - i);
      if (v < 0) throw Error(ErrorCode::IllegalMove, "point below delta has no shape");
      parts[static_cast<size_t>(i)] = v;
    }
    return Partition(parts);
  };
  TableauSequence seq;
  bool any_stay = false, any_minus = false;
  for (const Step& s : walk.steps) {
    any_stay |= s.stay;
    any_minus |= (!s.stay && s.dir < 0);
  }
  seq.kind = kind.value_or(any_stay ? TableauKind::Hesitating
                                    : (any_minus ? TableauKind::Oscillating
                                                 : TableauKind::StandardYoung));
  for (const Point& p : walk.points()) seq.shapes.push_back(to_shape(p));
  validate_sequence(seq);
  return seq;
}

namespace {

struct HalfMove {
  enum Kind { Stay, Insert, Delete } kind;
  int value = 0;
};

TableauSequence replay(TableauKind kind, const std::vector<HalfMove>& moves) {
  TableauSequence seq;
  seq.kind = kind;
  FilledTableau tab;
  seq.shapes.push_back(tab.shape());
  for (const HalfMove& m : moves) {
    switch (m.kind) {
      case HalfMove::Stay: break;
      case HalfMove::Insert: tab.insert(m.value); break;
      case HalfMove::Delete: tab.delete_min(m.value); break;
    }
    seq.shapes.push_back(tab.shape());
  }
  return seq;
}

}  // namespace

TableauSequence diagram_to_tableau(const OpenArcDiagram& d, int k) {
  const PatternFlavor plain = d.kind() == DiagramKind::PartitionType
                                  ? PatternFlavor::EnhancedNesting
                                  : PatternFlavor::Nesting;
  const PatternFlavor future = d.kind() == DiagramKind::PartitionType
                                   ? PatternFlavor::FutureEnhancedNesting
                                   : PatternFlavor::FutureNesting;
  if (max_pattern_level(d, plain) > k || max_pattern_level(d, future) > k) {
    throw Error(ErrorCode::PatternViolation,
                "diagram is outside the level-" + std::to_string(k) + " avoidance class");
  }
  const int n = d.n();
  std::map<int, int> open_label;
  int next_label = n + 1;
  for (int o : d.open_arcs()) open_label[o] = next_label++;
  std::map<int, int> closes_at;  // left endpoint -> right endpoint
  std::map<int, int> opens_at;   // right endpoint -> left endpoint
  for (const auto& [i, j] : d.closed_arcs()) {
    closes_at[i] = j;
    opens_at[j] = i;
  }
  std::vector<HalfMove> moves;
  for (int v = 1; v <= n; ++v) {
    const bool is_left = closes_at.count(v) || open_label.count(v);
    const bool is_right = opens_at.count(v) > 0;
    const int label = closes_at.count(v) ? closes_at[v] : (open_label.count(v) ? open_label[v] : 0);
    if (d.kind() == DiagramKind::PartitionType) {
      if (is_left && is_right) {
        moves.push_back({HalfMove::Insert, label});
        moves.push_back({HalfMove::Delete, v});
      } else if (is_left) {
        moves.push_back({HalfMove::Stay, 0});
        moves.push_back({HalfMove::Insert, label});
      } else if (is_right) {
        moves.push_back({HalfMove::Delete, v});
        moves.push_back({HalfMove::Stay, 0});
      } else {
        moves.push_back({HalfMove::Insert, v});
        moves.push_back({HalfMove::Delete, v});
      }
    } else {
      if (is_left) {
        moves.push_back({HalfMove::Insert, label});
      } else if (is_right) {
        moves.push_back({HalfMove::Delete, v});
      } else {
        throw Error(ErrorCode::PatternViolation,
                    "matching-type diagram must cover every vertex");
      }
    }
  }
  TableauSequence seq = replay(d.kind() == DiagramKind::PartitionType ? TableauKind::Hesitating
                                                                      : TableauKind::Oscillating,
                               moves);
  const ValidationResult info = validate_sequence(seq);
  if (info.max_height > k) {
    throw Error(ErrorCode::HeightExceedsK, "image exceeds the height bound");
  }
  return seq;
}

OpenArcDiagram tableau_to_diagram(const TableauSequence& seq, int k, DiagramKind kind) {
  const ValidationResult info = validate_sequence(seq);
  if (info.max_height > k) {
    throw Error(ErrorCode::HeightExceedsK, "sequence exceeds the height bound");
  }
  if (!info.final_shape.is_row()) {
    throw Error(ErrorCode::NotRowFinal, "final shape must be a single row");
  }
  const int moves = seq.moves();
  const int group = kind == DiagramKind::PartitionType ? 2 : 1;
  if (moves % group != 0) {
    throw Error(ErrorCode::BadPairing, "move count does not match the diagram kind");
  }
  const int n = moves / group;
  const int m = info.final_shape.part(0);

  // start from the final tableau: one row holding the open labels n+1..n+m
  std::vector<int> final_row(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) final_row[static_cast<size_t>(i)] = n + 1 + i;
  FilledTableau tab = m ? FilledTableau({final_row}) : FilledTableau();

  std::vector<Arc> closed;
  std::vector<int> open;

  auto added_row = [](const Partition& before, const Partition& after) {
    for (int r = 0; r <= before.height(); ++r) {
      if (after.part(r) == before.part(r) + 1) return r;
    }
    throw Error(ErrorCode::IllegalMove, "no added row");
  };
  auto removed_row = [](const Partition& before, const Partition& after) {
    for (int r = 0; r < before.height(); ++r) {
      if (after.part(r) == before.part(r) - 1) return r;
    }
    throw Error(ErrorCode::IllegalMove, "no removed row");
  };

  // undo one forward half-move ending at shapes[idx+1], starting at shapes[idx]
  auto undo_insert = [&](int idx) {
    const Partition& before = seq.shapes[static_cast<size_t>(idx)];
    const Partition& after = seq.shapes[static_cast<size_t>(idx) + 1];
    return tab.reverse_insert(added_row(before, after));
  };
  auto undo_delete = [&](int idx, int value) {
    const Partition& before = seq.shapes[static_cast<size_t>(idx)];
    const Partition& after = seq.shapes[static_cast<size_t>(idx) + 1];
    tab.reverse_delete(removed_row(before, after), value);
  };
  auto delta = [&](int idx) {
    return seq.shapes[static_cast<size_t>(idx) + 1].boxes() -
           seq.shapes[static_cast<size_t>(idx)].boxes();
  };

  auto record_left = [&](int v, int value) {
    if (value > n) {
      open.push_back(v);
    } else {
      closed.emplace_back(v, value);
    }
  };

  for (int v = n; v >= 1; --v) {
    if (kind == DiagramKind::PartitionType) {
      const int first = 2 * (v - 1);
      const int d1 = delta(first);
      const int d2 = delta(first + 1);
      if (d1 == 0 && d2 == 1) {  // (stay, insert): left endpoint
        record_left(v, undo_insert(first + 1));
      } else if (d1 == -1 && d2 == 0) {  // (delete v, stay): right endpoint
        undo_delete(first, v);
      } else if (d1 == 1 && d2 == -1) {  // (insert, delete v): both, or fixed point
        undo_delete(first + 1, v);
        const int value = undo_insert(first);
        if (value != v) record_left(v, value);
      } else {
        throw Error(ErrorCode::BadPairing, "unrecognized hesitating pair");
      }
    } else {
      const int idx = v - 1;
      if (delta(idx) == 1) {
        record_left(v, undo_insert(idx));
      } else {
        undo_delete(idx, v);
      }
    }
  }
  if (!tab.empty()) {
    throw Error(ErrorCode::InternalCorner, "inverse map left entries behind");
  }
  return OpenArcDiagram(n, std::move(closed), std::move(open), kind);
}

FilledTableau syt2_from_walk(const LatticeWalk& walk) {
  if (walk.start.size() != 1 || walk.start[0] != 1) {
    throw Error(ErrorCode::StartOutsideChamber, "expected a W_1 walk from (1)");
  }
  for (const Point& p : walk.points()) {
    if (p[0] < 1) throw Error(ErrorCode::IllegalMove, "walk leaves W_1");
  }
  std::vector<int> top, bottom;
  for (size_t j = 0; j < walk.steps.size(); ++j) {
    const Step& s = walk.steps[j];
    if (s.stay) throw Error(ErrorCode::IllegalMove, "oscillating walks have no stay steps");
    if (s.dir > 0) {
      top.push_back(static_cast<int>(j) + 1);
    } else {
      bottom.push_back(static_cast<int>(j) + 1);
    }
  }
  std::vector<std::vector<int>> rows;
  if (!top.empty()) rows.push_back(top);
  if (!bottom.empty()) rows.push_back(bottom);
  return FilledTableau(std::move(rows));
}

LatticeWalk walk_from_syt2(const FilledTableau& tableau) {
  const auto& rows = tableau.rows();
  if (rows.size() > 2) throw Error(ErrorCode::HeightExceedsK, "tableau has more than two rows");
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  std::vector<Step> steps(static_cast<size_t>(n), Step::make_stay());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int entry : rows[r]) {
      if (entry < 1 || entry > n) throw Error(ErrorCode::InvalidArgument, "entries must be 1..n");
      steps[static_cast<size_t>(entry) - 1] = Step::unit(0, r == 0 ? +1 : -1);
    }
  }
  LatticeWalk walk{{1}, std::move(steps)};
  for (const Point& p : walk.points()) {
    if (p[0] < 1) throw Error(ErrorCode::IllegalMove, "image walk leaves W_1");
  }
  return walk;
}

}  // namespace tabseq
