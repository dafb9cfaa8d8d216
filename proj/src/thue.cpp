#include "wordlab/thue.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordlab {

void Morphism::validate() const {
  if (source_size < 1 || target_size < 1)
    throw std::invalid_argument("morphism alphabets must be non-empty");
  if (images.size() != static_cast<std::size_t>(source_size))
    throw std::invalid_argument("one image per source letter required");
  for (const Word& image : images) {
    if (image.empty()) throw std::invalid_argument("images must be non-empty");
    if (image.alphabet_size() != target_size)
      throw std::invalid_argument("image alphabet mismatch");
  }
}

Word apply(const Morphism& m, const Word& w) {
  m.validate();
  if (w.alphabet_size() != m.source_size)
    throw std::invalid_argument("word alphabet mismatch");
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word& image = m.images[w[i]];
    out.insert(out.end(), image.letters().begin(), image.letters().end());
  }
  return Word(std::move(out), m.target_size);
}

Word iterate(const Morphism& m, const Word& seed, int steps) {
  if (m.source_size != m.target_size)
    throw std::invalid_argument("iteration needs source = target alphabet");
  if (steps < 0) throw std::invalid_argument("negative iteration count");
  Word w = seed;
  for (int i = 0; i < steps; ++i) w = apply(m, w);
  return w;
}

namespace {

// lcp[i][j] = longest common prefix of the suffixes at i and j.
std::vector<std::vector<int>> suffix_lcp(const Word& w) {
  std::size_t n = w.size();
  std::vector<std::vector<int>> lcp(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > 0;)
      if (w[i] == w[j]) lcp[i][j] = lcp[i + 1][j + 1] + 1;
  return lcp;
}

}  // namespace

bool is_square_free(const Word& w) {
  auto lcp = suffix_lcp(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t r = 1; i + 2 * r <= w.size(); ++r)
      if (lcp[i][i + r] >= static_cast<int>(r)) return false;
  return true;
}

bool is_cube_free(const Word& w) {
  auto lcp = suffix_lcp(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t r = 1; i + 3 * r <= w.size(); ++r)
      if (lcp[i][i + r] >= static_cast<int>(2 * r)) return false;
  return true;
}

int crochemore_k(const Morphism& m) {
  m.validate();
  std::size_t longest = 0, shortest = m.images.front().size();
  for (const Word& image : m.images) {
    longest = std::max(longest, image.size());
    shortest = std::min(shortest, image.size());
  }
  long long num = static_cast<long long>(longest) - 3;
  long long den = static_cast<long long>(shortest);
  long long floored = num >= 0 ? num / den : -((-num + den - 1) / den);
  return static_cast<int>(std::max<long long>(3, 1 + floored));
}

std::vector<Word> square_free_words(int alphabet_size, int max_len) {
  std::vector<Word> out;
  std::vector<int> letters;
  auto has_new_square = [&]() {
    // only squares ending at the last letter can be new
    std::size_t n = letters.size();
    for (std::size_t r = 1; 2 * r <= n; ++r) {
      bool square = true;
      for (std::size_t i = 0; i < r && square; ++i)
        square = letters[n - 2 * r + i] == letters[n - r + i];
      if (square) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    if (!letters.empty()) out.emplace_back(letters, alphabet_size);
    if (letters.size() == static_cast<std::size_t>(max_len)) return;
    for (int c = 0; c < alphabet_size; ++c) {
      letters.push_back(c);
      if (!has_new_square()) self(self);
      letters.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool is_square_free_morphism(const Morphism& m) {
  int k = crochemore_k(m);
  for (const Word& w : square_free_words(m.source_size, k))
    if (!is_square_free(apply(m, w))) return false;
  return true;
}

bool thue2_criterion(const Morphism& m) {
  m.validate();
  for (const Word& w : square_free_words(m.source_size, 3))
    if (!is_square_free(apply(m, w))) return false;
  for (int a = 0; a < m.source_size; ++a)
    for (int b = 0; b < m.source_size; ++b) {
      if (a == b) continue;
      const Word& u = m.images[a];
      const Word& v = m.images[b];
      if (u.size() > v.size()) continue;
      for (std::size_t at = 0; at + u.size() <= v.size(); ++at) {
        bool factor = true;
        for (std::size_t i = 0; i < u.size() && factor; ++i)
          factor = v[at + i] == u[i];
        if (factor) return false;
      }
    }
  return true;
}

Morphism thue_morse_morphism() {
  Morphism m;
  m.source_size = m.target_size = 2;
  m.images = {Word::parse("ab", 2), Word::parse("ba", 2)};
  return m;
}

Morphism thue_ternary_morphism() {
  Morphism m;
  m.source_size = m.target_size = 3;
  m.images = {Word::parse("abcab", 3), Word::parse("acabcb", 3),
              Word::parse("acbcacb", 3)};
  return m;
}

}  // namespace wordlab
