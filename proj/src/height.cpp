#include "wordlab/height.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wordlab {

std::optional<PowerFactorization> height_over(const Word& w,
                                              const std::vector<Word>& basis) {
  if (basis.empty()) throw std::invalid_argument("basis must be non-empty");
  std::vector<Word> bases = basis;
  for (const Word& b : bases) {
    if (b.empty()) throw std::invalid_argument("basis words must be non-empty");
    if (b.alphabet_size() != w.alphabet_size())
      throw std::invalid_argument("alphabet mismatch in basis");
  }
  std::sort(bases.begin(), bases.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.raw_less(b);
  });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::size_t len = w.size();
  std::vector<std::size_t> dist(len + 1, kInf);
  std::vector<std::pair<std::size_t, int>> from(len + 1, {0, 0});  // (base idx, exp)
  dist[0] = 0;
  for (std::size_t pos = 0; pos < len; ++pos) {
    if (dist[pos] == kInf) continue;
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
      const Word& b = bases[bi];
      std::size_t at = pos;
      int exp = 0;
      while (at + b.size() <= len) {
        bool match = true;
        for (std::size_t i = 0; i < b.size() && match; ++i)
          match = w[at + i] == b[i];
        if (!match) break;
        at += b.size();
        ++exp;
        if (dist[pos] + 1 < dist[at]) {
          dist[at] = dist[pos] + 1;
          from[at] = {bi, exp};
        }
      }
    }
  }
  if (dist[len] == kInf) return std::nullopt;
  PowerFactorization factorization;
  std::size_t pos = len;
  while (pos > 0) {
    auto [bi, exp] = from[pos];
    factorization.blocks.push_back({bases[bi], exp});
    pos -= bases[bi].size() * static_cast<std::size_t>(exp);
  }
  std::reverse(factorization.blocks.begin(), factorization.blocks.end());
  return factorization;
}

namespace {

// Largest e with base^e occurring at `start`.
int run_exponent(const Word& w, std::size_t start, const Word& base) {
  std::size_t at = start;
  int e = 0;
  while (at + base.size() <= w.size()) {
    bool match = true;
    for (std::size_t i = 0; i < base.size() && match; ++i)
      match = w[at + i] == base[i];
    if (!match) break;
    at += base.size();
    ++e;
  }
  return e;
}

struct Candidate {
  std::size_t start;
  Word period;
  int exponent;
  std::size_t cls;  // strong-comparability class id (small height only)

  std::size_t end() const {
    return start + period.size() * static_cast<std::size_t>(exponent);
  }
  Word occurrence_word() const { return period.repeated(exponent); }
};

bool candidate_order(const Candidate& a, const Candidate& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.period.size() != b.period.size()) return a.period.size() < b.period.size();
  if (a.period != b.period) return a.period.raw_less(b.period);
  return a.exponent < b.exponent;
}

std::vector<Word> acyclic_sorted(const std::vector<Word>& basis, int alphabet) {
  std::vector<Word> out;
  for (const Word& z : basis) {
    if (z.empty()) throw std::invalid_argument("basis words must be non-empty");
    if (z.alphabet_size() != alphabet)
      throw std::invalid_argument("alphabet mismatch in basis");
    if (is_acyclic(z)) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.raw_less(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SelectiveHeight small_selective_height(const Word& w, const std::vector<Word>& basis,
                                       int boundary) {
  if (boundary < 0) throw std::invalid_argument("boundary must be >= 0");
  std::vector<Word> periods = acyclic_sorted(basis, w.alphabet_size());
  if (periods.empty()) throw std::invalid_argument("basis has no acyclic word");
  auto classes = strong_classes(periods);
  std::vector<std::size_t> class_of(periods.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t member : classes[c]) class_of[member] = c;

  // Occurrences may be shrunk to exactly boundary+1 periods: shrinking
  // preserves disjointness and the period class.
  int m = boundary + 1;
  std::vector<Candidate> candidates;
  for (std::size_t pi = 0; pi < periods.size(); ++pi)
    for (std::size_t start = 0; start + periods[pi].size() * m <= w.size(); ++start)
      if (run_exponent(w, start, periods[pi]) >= m)
        candidates.push_back({start, periods[pi], m, class_of[pi]});
  std::sort(candidates.begin(), candidates.end(), candidate_order);

  SelectiveHeight best;
  std::vector<std::size_t> chosen;
  // Lexicographic DFS over candidate subsets; the first subset of each new
  // size is the lexicographically least one of that size.
  std::function<void(std::size_t, std::size_t, std::vector<bool>&)> dfs =
      [&](std::size_t idx, std::size_t next_free, std::vector<bool>& used_class) {
        if (chosen.size() > best.height) {
          best.height = chosen.size();
          best.witness.clear();
          for (std::size_t c : chosen)
            best.witness.push_back(
                {candidates[c].start, candidates[c].period, candidates[c].exponent});
        }
        for (std::size_t i = idx; i < candidates.size(); ++i) {
          const Candidate& cand = candidates[i];
          if (cand.start < next_free || used_class[cand.cls]) continue;
          used_class[cand.cls] = true;
          chosen.push_back(i);
          dfs(i + 1, cand.end(), used_class);
          chosen.pop_back();
          used_class[cand.cls] = false;
        }
      };
  std::vector<bool> used_class(classes.size(), false);
  dfs(0, 0, used_class);
  return best;
}

SelectiveHeight large_selective_height(const Word& w, const std::vector<Word>& basis,
                                       int boundary) {
  if (boundary < 0) throw std::invalid_argument("boundary must be >= 0");
  std::vector<Word> periods = acyclic_sorted(basis, w.alphabet_size());
  if (periods.empty()) throw std::invalid_argument("basis has no acyclic word");
  std::vector<Candidate> candidates;
  for (const Word& z : periods)
    for (std::size_t start = 0; start + z.size() * (boundary + 1) <= w.size(); ++start) {
      int e = run_exponent(w, start, z);
      for (int m = boundary + 1; m <= e; ++m)
        candidates.push_back({start, z, m, 0});
    }
  std::sort(candidates.begin(), candidates.end(), candidate_order);

  std::vector<Word> words(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    words[i] = candidates[i].occurrence_word();

  // chain[i] = longest valid selection starting with candidate i
  std::vector<std::size_t> chain(candidates.size(), 0);
  for (std::size_t i = candidates.size(); i-- > 0;) {
    chain[i] = 1;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (candidates[j].start < candidates[i].end()) continue;
      if (compare(words[i], words[j]) != LexOrdering::Incomparable) continue;
      chain[i] = std::max(chain[i], 1 + chain[j]);
    }
  }
  SelectiveHeight best;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    best.height = std::max(best.height, chain[i]);
  std::size_t need = best.height;
  std::size_t prev = candidates.size();
  for (std::size_t i = 0; need > 0 && i < candidates.size(); ++i) {
    if (chain[i] != need) continue;
    if (prev != candidates.size()) {
      if (candidates[i].start < candidates[prev].end()) continue;
      if (compare(words[prev], words[i]) != LexOrdering::Incomparable) continue;
    }
    best.witness.push_back({candidates[i].start, candidates[i].period,
                            candidates[i].exponent});
    prev = i;
    --need;
  }
  return best;
}

SelectiveHeight periodic_fragment_count(const Word& w, int n) {
  if (n < 2) throw std::invalid_argument("degree must be >= 2");
  std::vector<Candidate> candidates;
  int reps = 2 * n;
  for (std::size_t plen = 1; plen < static_cast<std::size_t>(n); ++plen)
    for (std::size_t start = 0; start + plen * reps <= w.size(); ++start) {
      Word x = w.subword(start, plen);
      if (!is_acyclic(x)) continue;
      if (run_exponent(w, start, x) >= reps)
        candidates.push_back({start, x, reps, 0});
    }
  std::sort(candidates.begin(), candidates.end(), candidate_order);

  auto gap_ok = [&](const Candidate& a, const Candidate& b) {
    if (b.start < a.end()) return false;
    std::size_t gap_len = b.start - a.end();
    if (gap_len <= static_cast<std::size_t>(n)) return false;
    LexOrdering o = compare(w.subword(a.end(), gap_len), a.period);
    return o == LexOrdering::Less || o == LexOrdering::Greater;
  };

  std::vector<std::size_t> chain(candidates.size(), 0);
  for (std::size_t i = candidates.size(); i-- > 0;) {
    chain[i] = 1;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (gap_ok(candidates[i], candidates[j]))
        chain[i] = std::max(chain[i], 1 + chain[j]);
  }
  SelectiveHeight best;
  for (std::size_t c : chain) best.height = std::max(best.height, c);
  std::size_t need = best.height;
  std::size_t prev = candidates.size();
  for (std::size_t i = 0; need > 0 && i < candidates.size(); ++i) {
    if (chain[i] != need) continue;
    if (prev != candidates.size() && !gap_ok(candidates[prev], candidates[i])) continue;
    best.witness.push_back({candidates[i].start, candidates[i].period,
                            candidates[i].exponent});
    prev = i;
    --need;
  }
  return best;
}

Word FragmentReport::reconstruct() const {
  std::vector<int> letters = residual.letters();
  for (std::size_t k = fragments.size(); k-- > 0;) {
    const Fragment& f = fragments[k];
    std::vector<int> body = f.period.repeated(f.exponent).letters();
    letters.insert(letters.begin() + f.cut_offset, body.begin(), body.end());
  }
  return Word(letters, input.alphabet_size());
}

std::string FragmentReport::to_text() const {
  std::ostringstream out;
  out << "input " << input.str() << "\n";
  for (const Fragment& f : fragments) {
    out << "fragment " << f.period.str() << "^" << f.exponent << " cut_at "
        << f.cut_offset << " pieces";
    for (auto [start, len] : f.source_pieces) out << " " << start << "+" << len;
    out << "\n";
  }
  out << "residual " << residual.str() << "\n";
  return out.str();
}

FragmentReport extract_fragments(const Word& w, int threshold) {
  if (threshold < 2) throw std::invalid_argument("threshold must be >= 2");
  FragmentReport report;
  report.input = w;
  std::vector<int> cur = w.letters();
  std::vector<std::size_t> orig(cur.size());
  for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = i;
  const int l = w.alphabet_size();

  auto word_at = [&](std::size_t start, std::size_t len) {
    return Word(std::vector<int>(cur.begin() + start, cur.begin() + start + len), l);
  };
  auto period_matches = [&](std::size_t start, std::size_t plen, std::size_t at) {
    for (std::size_t i = 0; i < plen; ++i)
      if (cur[at + i] != cur[start + (at + i - start) % plen]) return false;
    return true;
  };

  for (;;) {
    std::size_t t = static_cast<std::size_t>(threshold);
    std::size_t found_start = cur.size();
    std::size_t found_plen = 0;
    for (std::size_t start = 0; start < cur.size() && found_plen == 0; ++start)
      for (std::size_t plen = 1; start + plen * t <= cur.size(); ++plen) {
        bool match = true;
        for (std::size_t i = start + plen; i < start + plen * t && match; ++i)
          match = cur[i] == cur[i - plen];
        if (!match) continue;
        if (!is_acyclic(word_at(start, plen))) continue;
        found_start = start;
        found_plen = plen;
        break;
      }
    if (found_plen == 0) break;

    Word period = word_at(found_start, found_plen);
    // extend right by whole periods
    std::size_t end = found_start + found_plen * t;
    while (end + found_plen <= cur.size() && period_matches(found_start, found_plen, end))
      end += found_plen;
    // extend left by whole periods
    std::size_t begin = found_start;
    while (begin >= found_plen) {
      bool match = true;
      for (std::size_t i = 0; i < found_plen && match; ++i)
        match = cur[begin - found_plen + i] == period[i];
      if (!match) break;
      begin -= found_plen;
    }

    Fragment fragment;
    fragment.period = period;
    fragment.exponent = static_cast<int>((end - begin) / found_plen);
    fragment.cut_offset = begin;
    std::size_t piece_start = begin;
    for (std::size_t i = begin + 1; i <= end; ++i) {
      if (i == end || orig[i] != orig[i - 1] + 1) {
        fragment.source_pieces.emplace_back(orig[piece_start], i - piece_start);
        piece_start = i;
      }
    }
    report.fragments.push_back(std::move(fragment));

    cur.erase(cur.begin() + begin, cur.begin() + end);
    orig.erase(orig.begin() + begin, orig.begin() + end);
  }
  report.residual = Word(cur, l);
  return report;
}

}  // namespace wordlab
