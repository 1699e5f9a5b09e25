#include "circpart/set_partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "circpart/error.hpp"

namespace circpart {

SetPartition::SetPartition(int ground_size, std::vector<EdgeMask> blocks) : n_(ground_size), blocks_(std::move(blocks)) {
  if (n_ < 0 || n_ > 64) throw SizeError("partition ground set must have at most 64 elements");
  EdgeMask seen = 0;
  for (EdgeMask b : blocks_) {
    if (b == 0) throw PreconditionError("partition has an empty block");
    if (b & seen) throw PreconditionError("partition blocks overlap");
    seen |= b;
  }
  if (seen != full_mask(n_)) throw PreconditionError("partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(), [](EdgeMask x, EdgeMask y) { return lowest_bit(x) < lowest_bit(y); });
}

SetPartition SetPartition::discrete(int n) {
  std::vector<EdgeMask> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(bit(i));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
  if (n == 0) return SetPartition(0, {});
  return SetPartition(n, {full_mask(n)});
}

int SetPartition::block_of(int i) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if ((blocks_[k] >> i) & 1U) return static_cast<int>(k);
  throw PreconditionError("element outside the ground set");
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) throw PreconditionError("partitions have different ground sets");
  for (EdgeMask b : blocks_) {
    EdgeMask host = coarser.blocks_[static_cast<std::size_t>(coarser.block_of(lowest_bit(b)))];
    if ((b & ~host) != 0) return false;
  }
  return true;
}

std::string SetPartition::to_string(const std::vector<std::string>& labels) const {
  std::string out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += " | ";
    bool first = true;
    for_each_bit(blocks_[k], [&](int i) {
      if (!first) out += ' ';
      out += i < static_cast<int>(labels.size()) ? labels[static_cast<std::size_t>(i)] : std::to_string(i);
      first = false;
    });
  }
  return out;
}

SetPartition partition_join(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw PreconditionError("join of partitions on different ground sets");
  const int n = a.ground_size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (const SetPartition* p : {&a, &b})
    for (EdgeMask blk : p->blocks()) {
      int r = lowest_bit(blk);
      for_each_bit(blk, [&](int i) { parent[static_cast<std::size_t>(find(i))] = find(r); });
    }
  std::vector<EdgeMask> by_root(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) by_root[static_cast<std::size_t>(find(i))] |= bit(i);
  std::vector<EdgeMask> blocks;
  for (EdgeMask m : by_root)
    if (m) blocks.push_back(m);
  return SetPartition(n, std::move(blocks));
}

SetPartition partition_meet(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw PreconditionError("meet of partitions on different ground sets");
  std::vector<EdgeMask> blocks;
  for (EdgeMask x : a.blocks())
    for (EdgeMask y : b.blocks())
      if (x & y) blocks.push_back(x & y);
  return SetPartition(a.ground_size(), std::move(blocks));
}

std::vector<SetPartition> all_set_partitions(int n) {
  if (n > 12) throw SizeError("set partition enumeration is capped at 12 elements");
  std::vector<SetPartition> out;
  std::vector<EdgeMask> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= bit(i);
      rec(i + 1);
      blocks[j] &= ~bit(i);
    }
    blocks.push_back(bit(i));
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const {
  std::size_t h = static_cast<std::size_t>(p.ground_size());
  for (EdgeMask b : p.blocks()) h = h * 1000003U ^ std::hash<EdgeMask>{}(b);
  return h;
}

}  // namespace circpart
