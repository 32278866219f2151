#include "gbtc/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "gbtc/errors.hpp"

namespace gbtc {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
}

EquivRelation::EquivRelation(std::size_t ground_size,
                             std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)), block_of_(ground_size, kUnassigned) {
  for (auto& block : blocks_) {
    if (block.empty()) throw InputError("equivalence relation: empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t x : blocks_[b]) {
      if (x >= ground_size)
        throw InputError("equivalence relation: element out of range");
      if (block_of_[x] != kUnassigned)
        throw InputError("equivalence relation: blocks overlap");
      block_of_[x] = b;
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), kUnassigned) !=
      block_of_.end())
    throw InputError("equivalence relation: blocks do not cover ground set");
}

EquivRelation EquivRelation::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return EquivRelation(n, std::move(blocks));
}

EquivRelation EquivRelation::indiscrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  if (n > 0) {
    blocks.emplace_back();
    for (std::size_t i = 0; i < n; ++i) blocks.front().push_back(i);
  }
  return EquivRelation(n, std::move(blocks));
}

EquivRelation EquivRelation::from_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < labels.size(); ++i) grouped[labels[i]].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [_, block] : grouped) blocks.push_back(std::move(block));
  return EquivRelation(labels.size(), std::move(blocks));
}

std::size_t EquivRelation::block_of(std::size_t element) const {
  if (element >= block_of_.size())
    throw InputError("equivalence relation: element out of range");
  return block_of_[element];
}

std::vector<std::size_t> EquivRelation::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& block : blocks_) sizes.push_back(block.size());
  return sizes;
}

EquivRelation EquivRelation::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != ground_size())
    throw InputError("equivalence relation: permutation size mismatch");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : blocks_) {
    auto& out = blocks.emplace_back();
    for (std::size_t x : block) out.push_back(perm[x]);
  }
  return EquivRelation(ground_size(), std::move(blocks));
}

std::string EquivRelation::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out << ' ';
    out << '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out << ',';
      out << blocks_[b][i] + 1;
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

}  // namespace gbtc
