#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabseq/numeric.hpp"

namespace tabseq {

struct TreeLabel {
  int i = 0;
  int j = 0;

  friend bool operator==(const TreeLabel&, const TreeLabel&) = default;
  friend std::strong_ordering operator<=>(const TreeLabel&, const TreeLabel&) = default;
};

// A two-label succession system: children depend only on the parent label.
struct SuccessionRule {
  std::string name;
  TreeLabel root;
  std::function<std::vector<TreeLabel>(const TreeLabel&)> successors;
};

enum class BuiltinRule { A, B, C };

std::optional<BuiltinRule> builtin_rule_from_name(const std::string& name);
SuccessionRule builtin_rule(BuiltinRule which);

struct TreeLevel {
  BigInt size;
  std::map<TreeLabel, BigInt> labels;
};

// Breadth-first label-multiset expansion; level 1 is the root.
std::vector<TreeLevel> expand_levels(const SuccessionRule& rule, int depth, int guard = 15);

}  // namespace tabseq
