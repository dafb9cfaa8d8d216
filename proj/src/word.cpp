#include "wordlab/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wordlab {

std::string to_string(LexOrdering o) {
  switch (o) {
    case LexOrdering::Less: return "less";
    case LexOrdering::Greater: return "greater";
    case LexOrdering::Equal: return "equal";
    case LexOrdering::Incomparable: return "incomparable";
  }
  return "?";
}

Word::Word(std::vector<int> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_(alphabet_size) {
  if (alphabet_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  for (int c : letters_) {
    if (c < 0 || c >= alphabet_)
      throw std::invalid_argument("letter index " + std::to_string(c) +
                                  " out of range for alphabet of size " +
                                  std::to_string(alphabet_));
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<int> letters;
  if (!text.empty()) {
    bool numeric = text.find_first_not_of("0123456789,") == std::string_view::npos;
    if (numeric) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        if (item.empty()) throw std::invalid_argument("empty item in word text");
        letters.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    } else {
      for (char c : text) {
        if (c < 'a' || c > 'z')
          throw std::invalid_argument(std::string("bad character '") + c +
                                      "' in word text");
        letters.push_back(c - 'a');
      }
    }
  }
  return Word(std::move(letters), alphabet_size);
}

Word Word::subword(std::size_t start, std::size_t len) const {
  if (start + len > size()) throw std::out_of_range("subword out of range");
  return Word(std::vector<int>(letters_.begin() + start, letters_.begin() + start + len),
              alphabet_);
}

Word Word::suffix(std::size_t start) const {
  if (start > size()) throw std::out_of_range("suffix start out of range");
  return subword(start, size() - start);
}

Word Word::concat(const Word& other) const {
  if (alphabet_ != other.alphabet_)
    throw std::invalid_argument("alphabet mismatch in concat");
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out), alphabet_);
}

Word Word::repeated(int times) const {
  if (times < 0) throw std::invalid_argument("negative repetition");
  std::vector<int> out;
  out.reserve(size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out), alphabet_);
}

Word Word::rotated(std::size_t shift) const {
  if (empty()) return *this;
  shift %= size();
  std::vector<int> out(letters_.begin() + shift, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + shift);
  return Word(std::move(out), alphabet_);
}

std::string Word::str() const {
  if (alphabet_ <= 26) {
    std::string s;
    s.reserve(size());
    for (int c : letters_) s.push_back(static_cast<char>('a' + c));
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(letters_[i]);
  }
  return s;
}

LexOrdering compare(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size())
    throw std::invalid_argument("alphabet mismatch in compare");
  std::size_t m = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] != v[i]) return u[i] > v[i] ? LexOrdering::Greater : LexOrdering::Less;
  }
  if (u.size() == v.size()) return LexOrdering::Equal;
  return LexOrdering::Incomparable;
}

Word k_tail(const Word& w, std::size_t start, std::size_t k) {
  if (start >= w.size()) throw std::out_of_range("tail start out of range");
  return w.subword(start, std::min(k, w.size() - start));
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of empty word");
  std::size_t n = w.size();
  for (std::size_t r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    bool periodic = true;
    for (std::size_t i = r; i < n && periodic; ++i)
      periodic = w[i] == w[i - r];
    if (periodic) return {w.subword(0, r), static_cast<int>(n / r)};
  }
  return {w, 1};  // unreachable: r = n always matches
}

std::optional<PowerOccurrence> contains_power(const Word& w, int d) {
  if (d < 1) throw std::invalid_argument("power exponent must be >= 1");
  std::size_t ud = static_cast<std::size_t>(d);
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t r = 1; start + r * ud <= w.size(); ++r) {
      bool match = true;
      for (std::size_t i = start + r; i < start + r * ud && match; ++i)
        match = w[i] == w[i - r];
      if (match) return PowerOccurrence{start, w.subword(start, r)};
    }
  }
  return std::nullopt;
}

bool strong_comparable(const Word& u, const Word& v) {
  if (u.empty() || v.empty())
    throw std::invalid_argument("strong comparability needs non-empty words");
  for (std::size_t i = 0; i < u.size(); ++i) {
    Word ru = u.rotated(i);
    for (std::size_t j = 0; j < v.size(); ++j) {
      LexOrdering o = compare(ru, v.rotated(j));
      if (o == LexOrdering::Equal || o == LexOrdering::Incomparable) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> strong_classes(const std::vector<Word>& words) {
  std::size_t n = words.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!strong_comparable(words[i], words[j])) {
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<int> class_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[root]].push_back(i);
  }
  return classes;
}

std::size_t distinct_factor_count(const Word& w, std::size_t k) {
  if (k < 1) throw std::invalid_argument("factor length must be >= 1");
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i + k <= w.size(); ++i)
    seen.insert(std::vector<int>(w.letters().begin() + i, w.letters().begin() + i + k));
  return seen.size();
}

WordCycle WordCycle::of(const Word& w) {
  if (w.empty()) throw std::invalid_argument("word cycle of empty word");
  WordCycle cycle;
  cycle.length = w.size();
  std::set<std::vector<int>> distinct;
  for (std::size_t i = 0; i < w.size(); ++i)
    distinct.insert(w.rotated(i).letters());
  for (const auto& letters : distinct)
    cycle.shift_set.emplace_back(letters, w.alphabet_size());
  cycle.representative = cycle.shift_set.front();
  return cycle;
}

}  // namespace wordlab
