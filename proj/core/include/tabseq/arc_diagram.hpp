#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tabseq {

enum class DiagramKind { PartitionType, MatchingType };

const char* diagram_kind_name(DiagramKind kind);
std::optional<DiagramKind> diagram_kind_from_name(const std::string& name);

enum class PatternFlavor { Crossing, Nesting, EnhancedNesting, FutureNesting, FutureEnhancedNesting };

struct PatternQuery {
  int size = 1;
  PatternFlavor flavor = PatternFlavor::Nesting;
};

using Arc = std::pair<int, int>;

// Vertices 1..n with closed arcs (i,j), i<j, and open arcs given by their
// left endpoints.  PartitionType allows a vertex to close one arc and open
// another; MatchingType allows at most one arc per vertex.
class OpenArcDiagram {
 public:
  OpenArcDiagram(int n, std::vector<Arc> closed, std::vector<int> open, DiagramKind kind);

  int n() const { return n_; }
  DiagramKind kind() const { return kind_; }
  const std::vector<Arc>& closed_arcs() const { return closed_; }
  const std::vector<int>& open_arcs() const { return open_; }

  std::vector<int> fixed_points() const;
  // Closed arcs plus a loop (v,v) at every fixed point (PartitionType).
  std::vector<Arc> enhanced_arcs() const;

  bool left_endpoint(int v) const;
  bool right_endpoint(int v) const;

  friend bool operator==(const OpenArcDiagram&, const OpenArcDiagram&) = default;
  friend bool operator<(const OpenArcDiagram& a, const OpenArcDiagram& b) {
    return std::tie(a.n_, a.kind_, a.closed_, a.open_) < std::tie(b.n_, b.kind_, b.closed_, b.open_);
  }

 private:
  int n_ = 0;
  std::vector<Arc> closed_;
  std::vector<int> open_;
  DiagramKind kind_ = DiagramKind::PartitionType;
};

bool contains_pattern(const OpenArcDiagram& d, const PatternQuery& q);

// Largest k such that the diagram contains the flavor at level k.
// Longest-chain computation, not subset search.
int max_pattern_level(const OpenArcDiagram& d, PatternFlavor flavor);

// All diagrams of the kind avoiding the (k+1)-level patterns of the class:
// enhanced + future-enhanced for PartitionType, plain + future for
// MatchingType (MatchingType diagrams cover every vertex).
std::vector<OpenArcDiagram> generate_diagrams(DiagramKind kind, int n, int k,
                                              std::optional<int> open_count = std::nullopt,
                                              int guard = 9);

}  // namespace tabseq
