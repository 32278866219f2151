#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gbtc {

/// A partition of the ground set {0, ..., size-1} into nonempty blocks.
///
/// Blocks are kept in canonical order: each block sorted ascending, blocks
/// sorted by their smallest element. Two relations are equal iff they
/// describe the same partition.
class EquivRelation {
 public:
  EquivRelation() = default;

  /// Throws InputError unless `blocks` are disjoint, nonempty and cover
  /// {0, ..., ground_size-1}.
  EquivRelation(std::size_t ground_size,
                std::vector<std::vector<std::size_t>> blocks);

  static EquivRelation discrete(std::size_t n);
  static EquivRelation indiscrete(std::size_t n);
  /// Builds the relation from a block label per element.
  static EquivRelation from_labels(const std::vector<std::size_t>& labels);

  std::size_t ground_size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const {
    return blocks_;
  }
  std::size_t block_of(std::size_t element) const;

  bool is_discrete() const { return blocks_.size() == block_of_.size(); }
  bool is_indiscrete() const { return blocks_.size() <= 1; }
  std::vector<std::size_t> block_sizes() const;

  /// Same relation with every element relabelled by `perm[i]`.
  EquivRelation permuted(const std::vector<std::size_t>& perm) const;

  std::string to_string() const;

  friend bool operator==(const EquivRelation&, const EquivRelation&) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace gbtc
