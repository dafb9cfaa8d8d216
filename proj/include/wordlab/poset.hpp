#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// Finite strict partial order. The transitive closure is taken at
// construction, so callers may supply covering relations only.
class Poset {
 public:
  Poset() = default;
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs,
        std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool less(std::size_t a, std::size_t b) const { return lt_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const {
    return lt_[a][b] || lt_[b][a];
  }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

  // Edge-list text: first line is the element count, then one "a b" pair
  // (a < b) per line. Export emits the full closure, sorted.
  static Poset from_edge_list_text(const std::string& text);
  std::string to_edge_list_text() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<bool>> lt_;
  std::vector<std::string> labels_;
};

// Maximum-cardinality antichain; certificate is the lexicographically
// least element-index set among the maximum ones.
std::vector<std::size_t> max_antichain(const Poset& p);

std::size_t poset_width(const Poset& p);

struct ChainPartition {
  std::vector<std::vector<std::size_t>> chains;
};

// Minimum chain partition; |chains| equals the maximum antichain size.
ChainPartition min_chain_partition(const Poset& p);

// Elements are the tails of w at the given positions; u < v iff u is
// lexicographically less than v and starts strictly to the left.
Poset tail_poset(const Word& w, const std::vector<std::size_t>& positions);

// Same order on explicit disjoint occurrences (position, word).
Poset subword_poset(const std::vector<std::pair<std::size_t, Word>>& occurrences);

}  // namespace wordlab
