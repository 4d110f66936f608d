#include "tabseq/partition.hpp"

#include <numeric>

#include "tabseq/error.hpp"

namespace tabseq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw Error(ErrorCode::InvalidArgument, "parts must be weakly decreasing and positive");
    }
  }
}

int Partition::boxes() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::addable_rows(int max_height) const {
  std::vector<int> rows;
  const int h = height();
  for (int r = 0; r <= h; ++r) {
    if (max_height >= 0 && r >= max_height) break;
    if (r == 0 || part(r) < part(r - 1)) rows.push_back(r);
  }
  return rows;
}

std::vector<int> Partition::removable_rows() const {
  std::vector<int> rows;
  const int h = height();
  for (int r = 0; r < h; ++r) {
    if (r + 1 == h || part(r) > part(r + 1)) rows.push_back(r);
  }
  return rows;
}

Partition Partition::with_added_box(int row) const {
  if (row < 0 || row > height() || (row > 0 && part(row) >= part(row - 1))) {
    throw Error(ErrorCode::IllegalMove, "cannot add a box at row " + std::to_string(row));
  }
  std::vector<int> p = parts_;
  if (row == height()) {
    p.push_back(1);
  } else {
    p[static_cast<size_t>(row)] += 1;
  }
  return Partition(std::move(p));
}

Partition Partition::with_removed_box(int row) const {
  if (row < 0 || row >= height() || (row + 1 < height() && part(row) <= part(row + 1))) {
    throw Error(ErrorCode::IllegalMove, "cannot remove a box at row " + std::to_string(row));
  }
  std::vector<int> p = parts_;
  p[static_cast<size_t>(row)] -= 1;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

}  // namespace tabseq
