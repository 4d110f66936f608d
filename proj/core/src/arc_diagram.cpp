#include "tabseq/arc_diagram.hpp"

#include <algorithm>
#include <set>

#include "tabseq/error.hpp"

namespace tabseq {

const char* diagram_kind_name(DiagramKind kind) {
  return kind == DiagramKind::PartitionType ? "partition" : "matching";
}

std::optional<DiagramKind> diagram_kind_from_name(const std::string& name) {
  if (name == "partition") return DiagramKind::PartitionType;
  if (name == "matching") return DiagramKind::MatchingType;
  return std::nullopt;
}

OpenArcDiagram::OpenArcDiagram(int n, std::vector<Arc> closed, std::vector<int> open,
                               DiagramKind kind)
    : n_(n), closed_(std::move(closed)), open_(std::move(open)), kind_(kind) {
  std::sort(closed_.begin(), closed_.end());
  std::sort(open_.begin(), open_.end());
  std::vector<int> lefts(static_cast<size_t>(n) + 1, 0);
  std::vector<int> rights(static_cast<size_t>(n) + 1, 0);
  for (const auto& [i, j] : closed_) {
    if (i < 1 || j <= i || j > n_) {
      throw Error(ErrorCode::InvalidArgument, "closed arc endpoints must satisfy 1 <= i < j <= n");
    }
    lefts[static_cast<size_t>(i)] += 1;
    rights[static_cast<size_t>(j)] += 1;
  }
  for (int o : open_) {
    if (o < 1 || o > n_) throw Error(ErrorCode::InvalidArgument, "open arc endpoint out of range");
    lefts[static_cast<size_t>(o)] += 1;
  }
  for (int v = 1; v <= n_; ++v) {
    const int l = lefts[static_cast<size_t>(v)];
    const int r = rights[static_cast<size_t>(v)];
    if (kind_ == DiagramKind::PartitionType) {
      if (l > 1 || r > 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "partition-type vertex may open at most one arc and close at most one");
      }
    } else {
      if (l + r > 1) {
        throw Error(ErrorCode::InvalidArgument, "matching-type vertex may touch at most one arc");
      }
    }
  }
  if (std::adjacent_find(closed_.begin(), closed_.end()) != closed_.end() ||
      std::adjacent_find(open_.begin(), open_.end()) != open_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate arc");
  }
}

bool OpenArcDiagram::left_endpoint(int v) const {
  if (std::binary_search(open_.begin(), open_.end(), v)) return true;
  return std::any_of(closed_.begin(), closed_.end(), [v](const Arc& a) { return a.first == v; });
}

bool OpenArcDiagram::right_endpoint(int v) const {
  return std::any_of(closed_.begin(), closed_.end(), [v](const Arc& a) { return a.second == v; });
}

std::vector<int> OpenArcDiagram::fixed_points() const {
  std::set<int> used;
  for (const auto& [i, j] : closed_) {
    used.insert(i);
    used.insert(j);
  }
  used.insert(open_.begin(), open_.end());
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!used.count(v)) out.push_back(v);
  }
  return out;
}

std::vector<Arc> OpenArcDiagram::enhanced_arcs() const {
  std::vector<Arc> arcs = closed_;
  for (int v : fixed_points()) arcs.emplace_back(v, v);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace {

// Longest chain i_1 < ... < i_k <= j_k < ... < j_1 over the given arcs.
// Loops satisfy i = j and can only sit innermost.
int longest_nesting_chain(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<int> best(arcs.size(), 1);
  int out = 0;
  for (size_t a = 0; a < arcs.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      if (arcs[b].first < arcs[a].first && arcs[a].second < arcs[b].second) {
        best[a] = std::max(best[a], best[b] + 1);
      }
    }
    out = std::max(out, best[a]);
  }
  return out;
}

// Largest family i_1 < ... < i_k < j_1 < ... < j_k (pairwise crossing).
int longest_crossing_family(const std::vector<Arc>& arcs) {
  int out = 0;
  for (const Arc& f : arcs) {
    // f plays the role of the arc with the smallest right endpoint j_1;
    // the rest must start inside (i_1, j_1) and end after j_1, increasing.
    std::vector<Arc> pool;
    for (const Arc& g : arcs) {
      if (f.first < g.first && g.first < f.second && f.second < g.second) pool.push_back(g);
    }
    std::sort(pool.begin(), pool.end());
    std::vector<int> lis(pool.size(), 1);
    int chain = 0;
    for (size_t a = 0; a < pool.size(); ++a) {
      for (size_t b = 0; b < a; ++b) {
        if (pool[b].first < pool[a].first && pool[b].second < pool[a].second) {
          lis[a] = std::max(lis[a], lis[b] + 1);
        }
      }
      chain = std::max(chain, lis[a]);
    }
    out = std::max(out, 1 + chain);
  }
  return out;
}

std::vector<Arc> arcs_right_of(const std::vector<Arc>& arcs, int v) {
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (a.first > v) out.push_back(a);
  }
  return out;
}

}  // namespace

int max_pattern_level(const OpenArcDiagram& d, PatternFlavor flavor) {
  switch (flavor) {
    case PatternFlavor::Crossing:
      return longest_crossing_family(d.closed_arcs());
    case PatternFlavor::Nesting:
      return longest_nesting_chain(d.closed_arcs());
    case PatternFlavor::EnhancedNesting:
      return longest_nesting_chain(d.enhanced_arcs());
    case PatternFlavor::FutureNesting: {
      if (d.open_arcs().empty()) return 0;
      const int o = d.open_arcs().front();
      return 1 + longest_nesting_chain(arcs_right_of(d.closed_arcs(), o));
    }
    case PatternFlavor::FutureEnhancedNesting: {
      if (d.open_arcs().empty()) return 0;
      const int o = d.open_arcs().front();
      return 1 + longest_nesting_chain(arcs_right_of(d.enhanced_arcs(), o));
    }
  }
  return 0;
}

bool contains_pattern(const OpenArcDiagram& d, const PatternQuery& q) {
  if (q.size < 1) throw Error(ErrorCode::InvalidArgument, "pattern size must be >= 1");
  return max_pattern_level(d, q.flavor) >= q.size;
}

namespace {

struct GenState {
  int n;
  int k;
  DiagramKind kind;
  std::optional<int> open_count;
  std::vector<Arc> closed;
  std::vector<int> open;
  std::vector<int> fixed;
  std::vector<int> pending;
  std::vector<OpenArcDiagram>* out;
};

bool avoidance_ok(const GenState& st) {
  std::vector<Arc> arcs = st.closed;
  if (st.kind == DiagramKind::PartitionType) {
    for (int v : st.fixed) arcs.emplace_back(v, v);
  }
  if (longest_nesting_chain(arcs) > st.k) return false;
  if (!st.open.empty()) {
    const int o = *std::min_element(st.open.begin(), st.open.end());
    if (1 + longest_nesting_chain(arcs_right_of(arcs, o)) > st.k) return false;
  }
  return true;
}

void emit(GenState& st) {
  if (!st.pending.empty()) return;
  if (st.open_count && static_cast<int>(st.open.size()) != *st.open_count) return;
  st.out->emplace_back(st.n, st.closed, st.open, st.kind);
}

void gen_partition(GenState& st, int v);

// Both start roles at vertex v, tried after each close choice.
void gen_partition_roles(GenState& st, int v, bool closed_here) {
  // no new arc: v is a fixed point only if it also closed nothing
  if (!closed_here) {
    st.fixed.push_back(v);
    if (avoidance_ok(st)) gen_partition(st, v + 1);
    st.fixed.pop_back();
  } else {
    gen_partition(st, v + 1);
  }
  // left endpoint of a closed arc (right endpoint chosen later)
  st.pending.push_back(v);
  gen_partition(st, v + 1);
  st.pending.pop_back();
  // left endpoint of an open arc
  st.open.push_back(v);
  if (avoidance_ok(st)) gen_partition(st, v + 1);
  st.open.pop_back();
}

void gen_partition(GenState& st, int v) {
  if (v > st.n) {
    emit(st);
    return;
  }
  const size_t pend = st.pending.size();
  for (size_t t = 0; t < pend; ++t) {
    const int left = st.pending[t];
    st.closed.emplace_back(left, v);
    st.pending.erase(st.pending.begin() + static_cast<long>(t));
    if (avoidance_ok(st)) gen_partition_roles(st, v, true);
    st.pending.insert(st.pending.begin() + static_cast<long>(t), left);
    st.closed.pop_back();
  }
  gen_partition_roles(st, v, false);
}

void gen_matching(GenState& st, int v) {
  if (v > st.n) {
    emit(st);
    return;
  }
  // v closes one pending arc, or starts a closed arc, or starts an open arc
  const size_t pend = st.pending.size();
  for (size_t t = 0; t < pend; ++t) {
    const int left = st.pending[t];
    st.closed.emplace_back(left, v);
    st.pending.erase(st.pending.begin() + static_cast<long>(t));
    if (avoidance_ok(st)) gen_matching(st, v + 1);
    st.pending.insert(st.pending.begin() + static_cast<long>(t), left);
    st.closed.pop_back();
  }
  st.pending.push_back(v);
  gen_matching(st, v + 1);
  st.pending.pop_back();

  st.open.push_back(v);
  if (avoidance_ok(st)) gen_matching(st, v + 1);
  st.open.pop_back();
}

}  // namespace

std::vector<OpenArcDiagram> generate_diagrams(DiagramKind kind, int n, int k,
                                              std::optional<int> open_count, int guard) {
  if (n < 0 || k < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 0 and k >= 1");
  if (n > guard) {
    throw Error(ErrorCode::GuardExceeded,
                "generate_diagrams guard " + std::to_string(guard) + " exceeded");
  }
  std::vector<OpenArcDiagram> out;
  GenState st{n, k, kind, open_count, {}, {}, {}, {}, &out};
  if (kind == DiagramKind::PartitionType) {
    gen_partition(st, 1);
  } else {
    gen_matching(st, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tabseq
