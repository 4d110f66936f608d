#include "tabseq/generating_tree.hpp"

#include "tabseq/error.hpp"

namespace tabseq {

std::optional<BuiltinRule> builtin_rule_from_name(const std::string& name) {
  if (name == "A" || name == "a") return BuiltinRule::A;
  if (name == "B" || name == "b") return BuiltinRule::B;
  if (name == "C" || name == "c") return BuiltinRule::C;
  return std::nullopt;
}

SuccessionRule builtin_rule(BuiltinRule which) {
  switch (which) {
    case BuiltinRule::A:
      // [1,1]; [i,j] -> [1,j+1],...,[i,j+1], [i+1,j],...,[i+1,1]
      return SuccessionRule{
          "A", {1, 1}, [](const TreeLabel& l) {
            std::vector<TreeLabel> out;
            for (int q = 1; q <= l.i; ++q) out.push_back({q, l.j + 1});
            for (int q = l.j; q >= 1; --q) out.push_back({l.i + 1, q});
            return out;
          }};
    case BuiltinRule::B:
      // [0,2]; [i,j] -> [0,j],...,[i-1,j], [i,j+1],[i+1,j],...,[i+j-1,2]
      // (second range steps diagonally; its printed start "[1,j+1]" does not
      // reproduce the level sizes, the diagonal from [i,j+1] does)
      return SuccessionRule{
          "B", {0, 2}, [](const TreeLabel& l) {
            std::vector<TreeLabel> out;
            for (int q = 0; q < l.i; ++q) out.push_back({q, l.j});
            for (int q = 0; q < l.j; ++q) out.push_back({l.i + q, l.j + 1 - q});
            return out;
          }};
    case BuiltinRule::C:
      // [0,0]; [i,j] -> [i,i],[i+1,j]; if i>0 also [i,j..i-1] and [i-1,j..i-1];
      // if i>0 and j>0 also [i,j-1],[i-1,j-1].  Ranges ascend and are empty
      // when inverted.
      return SuccessionRule{
          "C", {0, 0}, [](const TreeLabel& l) {
            std::vector<TreeLabel> out;
            out.push_back({l.i, l.i});
            out.push_back({l.i + 1, l.j});
            if (l.i > 0) {
              for (int q = l.j; q <= l.i - 1; ++q) out.push_back({l.i, q});
              for (int q = l.j; q <= l.i - 1; ++q) out.push_back({l.i - 1, q});
            }
            if (l.i > 0 && l.j > 0) {
              out.push_back({l.i, l.j - 1});
              out.push_back({l.i - 1, l.j - 1});
            }
            return out;
          }};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin rule");
}

std::vector<TreeLevel> expand_levels(const SuccessionRule& rule, int depth, int guard) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (depth > guard) {
    throw Error(ErrorCode::GuardExceeded,
                "expand_levels guard " + std::to_string(guard) + " exceeded");
  }
  std::vector<TreeLevel> out;
  std::map<TreeLabel, BigInt> cur{{rule.root, 1}};
  for (int level = 1; level <= depth; ++level) {
    TreeLevel info;
    info.size = 0;
    for (const auto& [label, count] : cur) info.size += count;
    info.labels = cur;
    out.push_back(std::move(info));
    if (level == depth) break;
    std::map<TreeLabel, BigInt> next;
    for (const auto& [label, count] : cur) {
      for (const TreeLabel& child : rule.successors(label)) next[child] += count;
    }
    cur = std::move(next);
  }
  return out;
}

}  // namespace tabseq
