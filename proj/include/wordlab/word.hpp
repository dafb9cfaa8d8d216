#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

// Letters are dense indices 0..size-1; index order is the lexicographic
// letter order.
struct Alphabet {
  int size = 0;
};

enum class LexOrdering { Less, Greater, Equal, Incomparable };

std::string to_string(LexOrdering o);

// Finite word over an ordered alphabet. Immutable after construction.
class Word {
 public:
  Word() = default;
  Word(std::vector<int> letters, int alphabet_size);

  // Accepts a lowercase-letter string (a..z -> 0..25) or a comma-separated
  // list of integer indices. Rejects indices >= alphabet_size.
  static Word parse(std::string_view text, int alphabet_size);

  int alphabet_size() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  Word subword(std::size_t start, std::size_t len) const;
  Word suffix(std::size_t start) const;
  Word concat(const Word& other) const;
  Word repeated(int times) const;
  Word rotated(std::size_t shift) const;  // left rotation by shift

  // Text form: letter string when the alphabet fits a..z, else comma list.
  std::string str() const;

  bool operator==(const Word& other) const = default;
  // Raw container order (length-insensitive elementwise), not the word order.
  bool raw_less(const Word& other) const { return letters_ < other.letters_; }

 private:
  std::vector<int> letters_;
  int alphabet_ = 0;
};

// Lexicographic word order with incomparability: Incomparable iff one word
// is a proper prefix of the other; Equal is its own outcome.
LexOrdering compare(const Word& u, const Word& v);

inline bool lex_greater(const Word& u, const Word& v) {
  return compare(u, v) == LexOrdering::Greater;
}
inline bool lex_less(const Word& u, const Word& v) {
  return compare(u, v) == LexOrdering::Less;
}

// First min(k, size-start) letters of the tail starting at `start`.
Word k_tail(const Word& w, std::size_t start, std::size_t k);

struct PrimitiveRoot {
  Word root;
  int exponent = 0;
};

// w = root^exponent with maximal exponent; root is acyclic.
PrimitiveRoot primitive_root(const Word& w);

inline bool is_acyclic(const Word& w) { return primitive_root(w).exponent == 1; }

struct PowerOccurrence {
  std::size_t start = 0;
  Word root;
};

// Some occurrence of a factor u^d (u non-empty), or absent.
// Tie-break: leftmost start, then shortest root.
std::optional<PowerOccurrence> contains_power(const Word& w, int d);

// True iff every pair of cyclic shifts (one of u, one of v) is strictly
// comparable (never Equal or Incomparable).
bool strong_comparable(const Word& u, const Word& v);

// Partition of the input into classes: transitive closure of the relation
// "not strongly comparable". Classes are ordered by smallest member index.
std::vector<std::vector<std::size_t>> strong_classes(const std::vector<Word>& words);

// Number of distinct contiguous subwords of length k.
std::size_t distinct_factor_count(const Word& w, std::size_t k);

// A word together with all its cyclic shifts.
struct WordCycle {
  Word representative;            // lexicographically least rotation
  std::size_t length = 0;
  std::vector<Word> shift_set;    // distinct rotations, sorted

  static WordCycle of(const Word& w);
};

}  // namespace wordlab
