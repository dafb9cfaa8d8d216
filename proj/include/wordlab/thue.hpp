#pragma once

#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// Substitution: one non-empty image word per source letter.
struct Morphism {
  int source_size = 0;
  int target_size = 0;
  std::vector<Word> images;

  void validate() const;
};

Word apply(const Morphism& m, const Word& w);

// Composes `steps` applications; requires source and target to coincide.
Word iterate(const Morphism& m, const Word& seed, int steps);

bool is_square_free(const Word& w);
bool is_cube_free(const Word& w);

// max{3, 1 + floor((M-3)/m)} with M/m the longest/shortest image lengths.
int crochemore_k(const Morphism& m);

// Exhaustive test over square-free source words of length <= crochemore_k.
bool is_square_free_morphism(const Morphism& m);

// (1) images of square-free words of length <= 3 are square-free, and
// (2) phi(a) a factor of phi(b) only when a = b.
bool thue2_criterion(const Morphism& m);

// All square-free words over the alphabet up to the given length,
// DFS with prefix pruning (square-freeness is prefix-closed).
std::vector<Word> square_free_words(int alphabet_size, int max_len);

Morphism thue_morse_morphism();   // a -> ab, b -> ba
Morphism thue_ternary_morphism(); // a -> abcab, b -> acabcb, c -> acbcacb

}  // namespace wordlab
