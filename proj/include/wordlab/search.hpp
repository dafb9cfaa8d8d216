#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "wordlab/word.hpp"

namespace wordlab {

using Json = nlohmann::json;

// Outcome of an extremal search confronted with its theoretical bound.
// A "violated" verdict is a hard failure everywhere this is consumed.
struct SearchReport {
  std::string op;
  Json params;
  Json empirical;
  Json witness;
  std::string bound_name;
  std::string bound_value;
  bool bound_is_log10 = false;
  bool exhausted = true;   // false when the cap cut the tree (lower bound only)
  std::string verdict;     // "respected" or "violated"
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool violated() const { return verdict == "violated"; }
  Json to_json(bool include_timing = false) const;
};

// Longest word over l letters that is neither n-divisible nor contains a
// d-th power; DFS pruned at the first reducible extension.
SearchReport max_irreducible_length(int n, int d, int l, int cap, int workers = 1);

// Maximum height over words of length < n, across all non-n-divisible
// words of length <= max_len.
SearchReport max_height_empirical(int n, int l, int max_len, int workers = 1);

// Maximum small selective height over all non-strongly-n-divisible words
// of length <= max_len, with the basis = acyclic words of period_len.
SearchReport max_selective_height_empirical(int period_len, int n, int l, int max_len,
                                            int boundary, int workers = 1);

// Longest sequence of one-hot 0/1 words subject to the enclosure condition:
// any p same-position-one words enclose a word whose one is strictly earlier.
SearchReport max_process_sequence(int p, int width);

// Edge construction for the selective-height lower bound; validates
// distinctness, per-step vertex types and the total count.
SearchReport lower_bound_graph(int n, int l);

}  // namespace wordlab
