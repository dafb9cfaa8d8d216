#include "wordlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "wordlab/bounds.hpp"
#include "wordlab/divisibility.hpp"
#include "wordlab/height.hpp"

namespace wordlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shortlex comparison of witness letter vectors.
bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> words_shorter_than(int n, int l) {
  std::vector<Word> out;
  std::vector<int> letters;
  auto rec = [&](auto&& self) -> void {
    if (!letters.empty()) out.emplace_back(letters, l);
    if (letters.size() + 1 >= static_cast<std::size_t>(n)) return;
    for (int c = 0; c < l; ++c) {
      letters.push_back(c);
      self(self);
      letters.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return shortlex_less(a.letters(), b.letters());
  });
  return out;
}

std::vector<Word> acyclic_words_of_length(int len, int l) {
  std::vector<Word> out;
  std::vector<int> letters(len, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      Word w(letters, l);
      if (is_acyclic(w)) out.push_back(w);
      return;
    }
    for (int c = 0; c < l; ++c) {
      letters[pos] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Runs fn(first_letter) over 0..l-1 distributing letters across workers;
// results land in a per-letter slot so the merge order is fixed.
template <typename Result>
std::vector<Result> fan_out(int l, int workers, const std::function<Result(int)>& fn) {
  std::vector<Result> slots(l);
  if (workers <= 1) {
    for (int c = 0; c < l; ++c) slots[c] = fn(c);
    return slots;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(workers, l); ++t)
    pool.emplace_back([&, t]() {
      for (int c = t; c < l; c += std::min(workers, l)) slots[c] = fn(c);
    });
  for (auto& th : pool) th.join();
  return slots;
}

struct SubtreeBest {
  std::uint64_t nodes = 0;
  std::size_t value = 0;            // op-specific score
  bool have_witness = false;
  std::vector<int> witness;
  bool exhausted = true;
};

}  // namespace

Json SearchReport::to_json(bool include_timing) const {
  Json j;
  j["op"] = op;
  j["params"] = params;
  j["empirical"] = empirical;
  j["witness"] = witness;
  j["bound_name"] = bound_name;
  j["bound_value"] = bound_value;
  j["bound_is_log10"] = bound_is_log10;
  j["exhausted"] = exhausted;
  j["verdict"] = verdict;
  j["nodes"] = nodes;
  if (include_timing) j["seconds"] = seconds;
  return j;
}

SearchReport max_irreducible_length(int n, int d, int l, int cap, int workers) {
  if (n < 2 || d < 2) throw std::invalid_argument("n and d must be >= 2");
  if (l < 1 || cap < 0) throw std::invalid_argument("l >= 1 and cap >= 0 required");
  auto start_time = Clock::now();

  std::function<SubtreeBest(int)> explore = [&](int first) {
    SubtreeBest best;
    std::vector<int> letters{first};
    auto rec = [&](auto&& self) -> void {
      Word w(letters, l);
      if (is_nd_reducible(w, n, d).reducible()) return;
      ++best.nodes;
      if (!best.have_witness ||
          letters.size() > best.witness.size() ||
          (letters.size() == best.witness.size() && letters < best.witness)) {
        best.have_witness = true;
        best.witness = letters;
        best.value = letters.size();
      }
      if (letters.size() == static_cast<std::size_t>(cap)) {
        best.exhausted = false;  // cannot tell whether extensions exist
        return;
      }
      for (int c = 0; c < l; ++c) {
        letters.push_back(c);
        self(self);
        letters.pop_back();
      }
    };
    if (cap >= 1) rec(rec);
    return best;
  };
  auto slots = fan_out<SubtreeBest>(l, workers, explore);

  SubtreeBest merged;  // the empty word is irreducible
  merged.nodes = 1;
  merged.have_witness = true;
  merged.exhausted = cap >= 1;
  for (const auto& s : slots) {
    merged.nodes += s.nodes;
    merged.exhausted = merged.exhausted && s.exhausted;
    if (!s.have_witness) continue;
    if (s.witness.size() > merged.witness.size() ||
        (s.witness.size() == merged.witness.size() && s.witness < merged.witness))
      merged.witness = s.witness;
  }

  SearchReport report;
  report.op = "max_irreducible_length";
  report.params = {{"n", n}, {"d", d}, {"l", l}, {"cap", cap}};
  report.empirical = merged.witness.size();
  report.witness = Word(merged.witness, l).str();
  BoundValue bound = psi(n, d, l);
  report.bound_name = "psi";
  report.bound_value = bound.to_string();
  report.bound_is_log10 = true;
  report.exhausted = merged.exhausted;
  std::size_t empirical = merged.witness.size();
  HighFloat lhs = empirical == 0 ? HighFloat(0) : high_log10(BigInt(empirical));
  report.verdict = lhs <= bound.log10() ? "respected" : "violated";
  report.nodes = merged.nodes;
  report.seconds = elapsed_seconds(start_time);
  return report;
}

SearchReport max_height_empirical(int n, int l, int max_len, int workers) {
  if (n < 2 || l < 1 || max_len < 1)
    throw std::invalid_argument("n >= 2, l >= 1, max_len >= 1 required");
  auto start_time = Clock::now();
  std::vector<Word> basis = words_shorter_than(n, l);

  std::function<SubtreeBest(int)> explore = [&](int first) {
    SubtreeBest best;
    std::vector<int> letters{first};
    auto rec = [&](auto&& self) -> void {
      Word w(letters, l);
      if (is_n_divisible(w, n)) return;
      ++best.nodes;
      auto factorization = height_over(w, basis);
      if (!factorization)
        throw std::logic_error("single letters must factor every word");
      std::size_t h = factorization->height();
      if (!best.have_witness || h > best.value ||
          (h == best.value && shortlex_less(letters, best.witness))) {
        best.have_witness = true;
        best.value = h;
        best.witness = letters;
      }
      if (letters.size() == static_cast<std::size_t>(max_len)) return;
      for (int c = 0; c < l; ++c) {
        letters.push_back(c);
        self(self);
        letters.pop_back();
      }
    };
    rec(rec);
    return best;
  };
  auto slots = fan_out<SubtreeBest>(l, workers, explore);

  SubtreeBest merged;
  merged.nodes = 1;  // empty word, height 0
  merged.have_witness = true;
  merged.value = 0;
  for (const auto& s : slots) {
    merged.nodes += s.nodes;
    if (!s.have_witness) continue;
    if (s.value > merged.value) {
      merged.value = s.value;
      merged.witness = s.witness;
    } else if (s.value == merged.value && !merged.witness.empty() &&
               shortlex_less(s.witness, merged.witness)) {
      merged.witness = s.witness;
    }
  }

  SearchReport report;
  report.op = "max_height_empirical";
  report.params = {{"n", n}, {"l", l}, {"max_len", max_len}};
  report.empirical = merged.value;
  report.witness = Word(merged.witness, l).str();
  report.nodes = merged.nodes;
  if (n >= 3) {
    BoundValue bound = phi(n, l);
    report.bound_name = "phi";
    report.bound_value = bound.to_string();
    report.bound_is_log10 = true;
    HighFloat lhs = merged.value == 0 ? HighFloat(0) : high_log10(BigInt(merged.value));
    report.verdict = lhs <= bound.log10() ? "respected" : "violated";
  } else {
    report.bound_name = "word_length_cap";
    report.bound_value = BigInt(max_len).str();
    report.bound_is_log10 = false;
    report.verdict = merged.value <= static_cast<std::size_t>(max_len) ? "respected"
                                                                       : "violated";
  }
  report.seconds = elapsed_seconds(start_time);
  return report;
}

SearchReport max_selective_height_empirical(int period_len, int n, int l, int max_len,
                                            int boundary, int workers) {
  if (n < 3 || l < 1 || max_len < 1 || boundary < 0)
    throw std::invalid_argument("n >= 3, l >= 1, max_len >= 1, boundary >= 0 required");
  if (period_len != 2 && period_len != 3 && period_len != n - 1)
    throw std::invalid_argument("period length must be 2, 3 or n-1");
  auto start_time = Clock::now();
  std::vector<Word> basis = acyclic_words_of_length(period_len, l);
  if (basis.empty()) throw std::invalid_argument("no acyclic periods for this alphabet");

  std::function<SubtreeBest(int)> explore = [&](int first) {
    SubtreeBest best;
    std::vector<int> letters{first};
    auto rec = [&](auto&& self) -> void {
      Word w(letters, l);
      if (is_strongly_n_divisible(w, n, basis, 1)) return;
      ++best.nodes;
      std::size_t h = small_selective_height(w, basis, boundary).height;
      if (!best.have_witness || h > best.value ||
          (h == best.value && shortlex_less(letters, best.witness))) {
        best.have_witness = true;
        best.value = h;
        best.witness = letters;
      }
      if (letters.size() == static_cast<std::size_t>(max_len)) return;
      for (int c = 0; c < l; ++c) {
        letters.push_back(c);
        self(self);
        letters.pop_back();
      }
    };
    rec(rec);
    return best;
  };
  auto slots = fan_out<SubtreeBest>(l, workers, explore);

  SubtreeBest merged;
  merged.nodes = 1;
  merged.have_witness = true;
  merged.value = 0;
  for (const auto& s : slots) {
    merged.nodes += s.nodes;
    if (!s.have_witness) continue;
    if (s.value > merged.value) {
      merged.value = s.value;
      merged.witness = s.witness;
    } else if (s.value == merged.value && !merged.witness.empty() &&
               shortlex_less(s.witness, merged.witness)) {
      merged.witness = s.witness;
    }
  }

  BigInt bound = beth(period_len, l, n);
  SearchReport report;
  report.op = "max_selective_height_empirical";
  report.params = {{"period_len", period_len}, {"n", n},       {"l", l},
                   {"max_len", max_len},       {"boundary", boundary}};
  report.empirical = merged.value;
  report.witness = Word(merged.witness, l).str();
  report.bound_name = "beth";
  report.bound_value = bound.str();
  report.bound_is_log10 = false;
  report.verdict = BigInt(merged.value) <= bound ? "respected" : "violated";
  report.nodes = merged.nodes;
  report.seconds = elapsed_seconds(start_time);
  return report;
}

SearchReport max_process_sequence(int p, int width) {
  if (p < 2 || width < 1) throw std::invalid_argument("p >= 2 and width >= 1 required");
  double size_estimate = std::pow(static_cast<double>(p), width);
  if (size_estimate > 1e5)
    throw std::invalid_argument("p^width too large for exhaustive search");
  auto start_time = Clock::now();

  // State: per position s, the number of trailing one-at-s words since the
  // last word with its one strictly earlier. Appending s is legal iff
  // state[s] <= p-2; it resets every later position.
  std::map<std::vector<int>, std::pair<std::size_t, int>> memo;  // -> (len, move)
  std::set<std::vector<int>> on_stack;
  std::uint64_t nodes = 0;

  std::function<std::size_t(std::vector<int>&)> longest = [&](std::vector<int>& state)
      -> std::size_t {
    auto it = memo.find(state);
    if (it != memo.end()) return it->second.first;
    if (!on_stack.insert(state).second)
      throw std::logic_error("process state recurs; sequence would be unbounded");
    ++nodes;
    std::size_t best = 0;
    int best_move = -1;
    for (int s = 0; s < width; ++s) {
      if (state[s] > p - 2) continue;
      std::vector<int> next = state;
      next[s] += 1;
      for (int t = s + 1; t < width; ++t) next[t] = 0;
      std::size_t len = 1 + longest(next);
      if (len > best) {
        best = len;
        best_move = s;
      }
    }
    on_stack.erase(state);
    memo[state] = {best, best_move};
    return best;
  };

  std::vector<int> initial(width, 0);
  std::size_t best_len = longest(initial);

  // reconstruct the witness: positions of the "1" per word, 1-based
  std::vector<int> sequence;
  std::vector<int> state = initial;
  while (true) {
    int move = memo[state].second;
    if (move < 0) break;
    sequence.push_back(move + 1);
    state[move] += 1;
    for (int t = move + 1; t < width; ++t) state[t] = 0;
  }

  BigInt bound = int_pow(BigInt(p), width) - 1;
  SearchReport report;
  report.op = "max_process_sequence";
  report.params = {{"p", p}, {"width", width}};
  report.empirical = best_len;
  report.witness = sequence;
  report.bound_name = "p^width - 1";
  report.bound_value = bound.str();
  report.bound_is_log10 = false;
  report.verdict = BigInt(best_len) <= bound ? "respected" : "violated";
  report.nodes = nodes;
  report.seconds = elapsed_seconds(start_time);
  return report;
}

SearchReport lower_bound_graph(int n, int l) {
  if (n < 4) throw std::invalid_argument("n >= 4 required");
  BigInt threshold = int_pow(BigInt(2), n - 1);
  if (BigInt(l) <= threshold) throw std::invalid_argument("l > 2^(n-1) required");
  auto start_time = Clock::now();

  // vertex offsets 0, 2^(n-1)-2^(n-2), ..., 2^(n-1)-2^2
  std::vector<long long> offsets{0};
  for (int k = 1; k <= n - 3; ++k)
    offsets.push_back((1LL << (n - 1)) - (1LL << (n - 1 - k)));

  int steps = l - static_cast<int>(1LL << (n - 1));
  Json edges = Json::array();
  std::set<std::pair<long long, long long>> seen;
  bool duplicates = false, types_ok = true, range_ok = true;
  for (int i = 2; i <= steps + 1; ++i) {
    std::vector<int> smaller_count(offsets.size(), 0);
    for (std::size_t b = 1; b < offsets.size(); ++b)
      for (std::size_t a = 0; a < b; ++a) {
        long long u = offsets[a] + i, v = offsets[b] + i;
        if (!seen.insert({u, v}).second) duplicates = true;
        if (u < 1 || v < 1 || u > l || v > l) range_ok = false;
        edges.push_back({u, v});
        ++smaller_count[b];
      }
    // per step the vertex joined to k smaller ones exists for k = 0..n-3
    for (std::size_t b = 0; b < offsets.size(); ++b)
      if (smaller_count[b] != static_cast<int>(b)) types_ok = false;
  }
  BigInt expected = alpha_lower(n, l);
  bool count_ok = BigInt(seen.size()) == expected;

  SearchReport report;
  report.op = "lower_bound_graph";
  report.params = {{"n", n}, {"l", l}};
  report.empirical = seen.size();
  report.witness = edges;
  report.bound_name = "alpha";
  report.bound_value = expected.str();
  report.bound_is_log10 = false;
  report.verdict =
      (!duplicates && types_ok && range_ok && count_ok) ? "respected" : "violated";
  report.nodes = seen.size();
  report.seconds = elapsed_seconds(start_time);
  return report;
}

}  // namespace wordlab
