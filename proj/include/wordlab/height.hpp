#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

struct PowerBlock {
  Word base;
  int exponent = 0;
};

// w = base_1^e_1 ... base_r^e_r; the height is r.
struct PowerFactorization {
  std::vector<PowerBlock> blocks;
  std::size_t height() const { return blocks.size(); }
};

// Minimal-length factorization of w into powers of members of `basis`,
// via shortest-path DP over prefix positions. Absent if unrepresentable.
std::optional<PowerFactorization> height_over(const Word& w,
                                              const std::vector<Word>& basis);

struct SelectiveOccurrence {
  std::size_t start = 0;
  Word period;
  int exponent = 0;

  std::size_t length() const { return period.size() * static_cast<std::size_t>(exponent); }
};

struct SelectiveHeight {
  std::size_t height = 0;
  std::vector<SelectiveOccurrence> witness;
};

// Maximum number of pairwise disjoint occurrences z^m (z in basis, z
// acyclic, m > boundary) whose periods lie in pairwise distinct
// strong-comparability classes.
SelectiveHeight small_selective_height(const Word& w, const std::vector<Word>& basis,
                                       int boundary);

// Maximum disjoint selection of z^m occurrences (m > boundary) in which
// each left-to-right adjacent pair of selected subwords is incomparable.
SelectiveHeight large_selective_height(const Word& w, const std::vector<Word>& basis,
                                       int boundary);

// Maximum count of disjoint subwords x^(2n) with |x| < n and x acyclic,
// consecutive selections separated by a gap of length > n that is
// comparable with the preceding period.
SelectiveHeight periodic_fragment_count(const Word& w, int n);

struct Fragment {
  Word period;
  int exponent = 0;
  std::size_t cut_offset = 0;  // offset in the word the fragment was cut from
  // Spans of the fragment in the original word; more than one piece when
  // the fragment straddles earlier cuts.
  std::vector<std::pair<std::size_t, std::size_t>> source_pieces;
};

struct FragmentReport {
  Word input;
  std::vector<Fragment> fragments;
  Word residual;

  // Reverse splice: re-inserting fragments at their cut offsets must
  // reproduce the input exactly.
  Word reconstruct() const;
  std::string to_text() const;
};

// Iteratively extracts maximal periodic fragments x^e (e >= threshold,
// x acyclic), leftmost occurrence first, shortest period on ties, each
// time extending by whole periods on both sides and splicing the rest.
FragmentReport extract_fragments(const Word& w, int threshold);

}  // namespace wordlab
