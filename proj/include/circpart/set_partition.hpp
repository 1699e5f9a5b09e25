#pragma once

#include <compare>
#include <string>
#include <vector>

#include "circpart/graph.hpp"

namespace circpart {

// Partition of the ground set {0, ..., n-1}, n <= 64, blocks as masks sorted
// by least element.
class SetPartition {
 public:
  SetPartition() = default;
  // Throws unless blocks are nonempty, disjoint and cover the ground set.
  SetPartition(int ground_size, std::vector<EdgeMask> blocks);

  static SetPartition discrete(int n);
  static SetPartition single_block(int n);

  int ground_size() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<EdgeMask>& blocks() const { return blocks_; }
  EdgeMask ground() const { return full_mask(n_); }
  // Index of the block containing element i.
  int block_of(int i) const;
  // Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;

  auto operator<=>(const SetPartition&) const = default;

  // Blocks written as label strings, e.g. "e1 f1 g1 | e2 f2 g2 | h1 h2".
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  int n_ = 0;
  std::vector<EdgeMask> blocks_;
};

SetPartition partition_join(const SetPartition& a, const SetPartition& b);
SetPartition partition_meet(const SetPartition& a, const SetPartition& b);

// All partitions of the n-element ground set, in restricted-growth order.
std::vector<SetPartition> all_set_partitions(int n);

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const;
};

}  // namespace circpart
