#include "wordlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wordlab {

Poset::Poset(std::size_t n,
             const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs,
             std::vector<std::string> labels)
    : n_(n), lt_(n, std::vector<bool>(n, false)), labels_(std::move(labels)) {
  for (auto [a, b] : less_pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("poset pair out of range");
    if (a == b) throw std::invalid_argument("strict order cannot be reflexive");
    lt_[a][b] = true;
  }
  // Floyd-Warshall closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lt_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (lt_[k][j]) lt_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (lt_[i][i]) throw std::invalid_argument("relation contains a cycle");
  if (labels_.empty()) {
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = std::to_string(i);
  }
  if (labels_.size() != n) throw std::invalid_argument("label count mismatch");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relation_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (lt_[i][j]) pairs.emplace_back(i, j);
  return pairs;
}

Poset Poset::from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n)) throw std::invalid_argument("missing element count");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t a = 0, b = 0;
  while (in >> a >> b) pairs.emplace_back(a, b);
  return Poset(n, pairs);
}

std::string Poset::to_edge_list_text() const {
  std::ostringstream out;
  out << n_ << "\n";
  for (auto [a, b] : relation_pairs()) out << a << " " << b << "\n";
  return out.str();
}

namespace {

// Kuhn's augmenting-path matching on the split digraph (left copy -> right
// copy, edge iff a < b). Deterministic: vertices and neighbors in index order.
struct SplitMatching {
  const Poset& p;
  std::vector<int> match_right;  // right vertex -> left vertex or -1
  std::vector<int> match_left;   // left vertex -> right vertex or -1

  explicit SplitMatching(const Poset& poset)
      : p(poset),
        match_right(poset.size(), -1),
        match_left(poset.size(), -1) {
    std::vector<bool> visited;
    for (std::size_t v = 0; v < p.size(); ++v) {
      visited.assign(p.size(), false);
      augment(v, visited);
    }
  }

  bool augment(std::size_t left, std::vector<bool>& visited) {
    for (std::size_t right = 0; right < p.size(); ++right) {
      if (!p.less(left, right) || visited[right]) continue;
      visited[right] = true;
      if (match_right[right] < 0 ||
          augment(static_cast<std::size_t>(match_right[right]), visited)) {
        match_right[right] = static_cast<int>(left);
        match_left[left] = static_cast<int>(right);
        return true;
      }
    }
    return false;
  }

  std::size_t size() const {
    std::size_t m = 0;
    for (int v : match_left)
      if (v >= 0) ++m;
    return m;
  }
};

}  // namespace

std::size_t poset_width(const Poset& p) {
  return p.size() - SplitMatching(p).size();
}

std::vector<std::size_t> max_antichain(const Poset& p) {
  std::size_t target = poset_width(p);
  // Greedy by index: keep element i iff a maximum antichain through the
  // current choice still exists among the remaining candidates.
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> candidates(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) candidates[i] = i;
  auto width_of = [&](const std::vector<std::size_t>& subset) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = 0; b < subset.size(); ++b)
        if (p.less(subset[a], subset[b])) pairs.emplace_back(a, b);
    return poset_width(Poset(subset.size(), pairs));
  };
  while (chosen.size() < target) {
    std::size_t pick = candidates.front();
    std::vector<std::size_t> rest;
    for (std::size_t c : candidates)
      if (c != pick && !p.comparable(pick, c)) rest.push_back(c);
    if (chosen.size() + 1 + width_of(rest) >= target) {
      chosen.push_back(pick);
      candidates = rest;
    } else {
      candidates.erase(candidates.begin());
    }
  }
  return chosen;
}

ChainPartition min_chain_partition(const Poset& p) {
  SplitMatching matching(p);
  ChainPartition partition;
  std::vector<bool> is_successor(p.size(), false);
  for (std::size_t v = 0; v < p.size(); ++v)
    if (matching.match_left[v] >= 0)
      is_successor[static_cast<std::size_t>(matching.match_left[v])] = true;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (is_successor[v]) continue;  // not a chain head
    std::vector<std::size_t> chain;
    int cur = static_cast<int>(v);
    while (cur >= 0) {
      chain.push_back(static_cast<std::size_t>(cur));
      cur = matching.match_left[static_cast<std::size_t>(cur)];
    }
    partition.chains.push_back(std::move(chain));
  }
  return partition;
}

Poset tail_poset(const Word& w, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> pos = positions;
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<std::pair<std::size_t, Word>> occurrences;
  for (std::size_t start : pos) {
    if (start >= w.size()) throw std::out_of_range("tail position out of range");
    occurrences.emplace_back(start, w.suffix(start));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < occurrences.size(); ++i)
    labels.push_back(std::to_string(occurrences[i].first));
  for (std::size_t i = 0; i < occurrences.size(); ++i)
    for (std::size_t j = 0; j < occurrences.size(); ++j) {
      if (occurrences[i].first >= occurrences[j].first) continue;
      if (compare(occurrences[i].second, occurrences[j].second) == LexOrdering::Less)
        pairs.emplace_back(i, j);
    }
  return Poset(occurrences.size(), pairs, std::move(labels));
}

Poset subword_poset(const std::vector<std::pair<std::size_t, Word>>& occurrences) {
  for (std::size_t i = 0; i < occurrences.size(); ++i)
    for (std::size_t j = i + 1; j < occurrences.size(); ++j) {
      auto [s1, w1] = occurrences[i];
      auto [s2, w2] = occurrences[j];
      if (s1 < s2 + w2.size() && s2 < s1 + w1.size())
        throw std::invalid_argument("overlapping occurrences");
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> labels;
  for (const auto& [start, word] : occurrences)
    labels.push_back(std::to_string(start) + ":" + word.str());
  for (std::size_t i = 0; i < occurrences.size(); ++i)
    for (std::size_t j = 0; j < occurrences.size(); ++j) {
      if (occurrences[i].first >= occurrences[j].first) continue;
      if (compare(occurrences[i].second, occurrences[j].second) == LexOrdering::Less)
        pairs.emplace_back(i, j);
    }
  return Poset(occurrences.size(), pairs, std::move(labels));
}

}  // namespace wordlab
