#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// Span of a contiguous factor: [start, start + len).
struct Span {
  std::size_t start = 0;
  std::size_t len = 0;
  bool operator==(const Span&) const = default;
};

// w = prefix . u_1 ... u_n with u_1 > u_2 > ... > u_n in the word order.
struct DivisionWitness {
  std::size_t prefix_len = 0;
  std::vector<Span> factors;
};

// n tails with strictly increasing start positions, u_1 > ... > u_n.
struct TailWitness {
  std::vector<std::size_t> starts;
};

// w = W_0 W_1 ... W_n with W_1 > ... > W_n, each W_i starting with
// basis[i]^exponent[i] (exponent >= k_min), all basis words distinct.
struct StrongDivisionWitness {
  std::vector<Span> parts;       // W_1..W_n (W_0 is the prefix before parts[0])
  std::vector<Word> basis;       // z_i per part
  std::vector<int> exponents;    // the chosen k per part
};

// Exact decision via memoized DP over (last factor span, factors left).
// Witness is canonical: smallest prefix length, then smallest cuts.
std::optional<DivisionWitness> is_n_divisible(const Word& w, int n);

std::optional<TailWitness> is_tail_n_divisible(const Word& w, int n);

std::optional<StrongDivisionWitness> is_strongly_n_divisible(
    const Word& w, int n, const std::vector<Word>& basis, int k_min);

struct NdVerdict {
  enum class Kind { NDivisible, HasPower, Irreducible };
  Kind kind = Kind::Irreducible;
  std::optional<DivisionWitness> division;  // set when NDivisible
  std::optional<PowerOccurrence> power;     // set when HasPower

  bool reducible() const { return kind != Kind::Irreducible; }
};

// n-divisible or contains a d-th power; NDivisible wins when both hold.
NdVerdict is_nd_reducible(const Word& w, int n, int d);

// O(1) span comparison helper: longest-common-prefix table of all suffix
// pairs of one word. Shared by the divisibility and height searches.
class LcpTable {
 public:
  explicit LcpTable(const Word& w);
  std::size_t lcp(std::size_t i, std::size_t j) const { return table_[i][j]; }
  LexOrdering compare_spans(Span a, Span b) const;

 private:
  const Word* w_;
  std::vector<std::vector<std::size_t>> table_;
};

}  // namespace wordlab
