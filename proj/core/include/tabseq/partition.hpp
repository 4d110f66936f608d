#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tabseq {

// Integer partition with weakly decreasing positive parts; the empty
// partition is the empty shape.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int height() const { return static_cast<int>(parts_.size()); }
  bool is_row() const { return parts_.size() <= 1; }
  int boxes() const;

  // Part length at 0-based row index; rows past the end have length 0.
  int part(int row) const {
    return row < height() ? parts_[static_cast<size_t>(row)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  // Rows where a box may be appended / removed keeping a valid shape.
  std::vector<int> addable_rows(int max_height = -1) const;
  std::vector<int> removable_rows() const;
  Partition with_added_box(int row) const;
  Partition with_removed_box(int row) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

}  // namespace tabseq
