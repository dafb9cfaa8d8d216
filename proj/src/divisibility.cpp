#include "wordlab/divisibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordlab {

LcpTable::LcpTable(const Word& w) : w_(&w) {
  std::size_t n = w.size();
  table_.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > 0;)
      if (w[i] == w[j]) table_[i][j] = table_[i + 1][j + 1] + 1;
}

LexOrdering LcpTable::compare_spans(Span a, Span b) const {
  std::size_t h = std::min(table_[a.start][b.start], std::min(a.len, b.len));
  if (h < a.len && h < b.len) {
    return (*w_)[a.start + h] > (*w_)[b.start + h] ? LexOrdering::Greater
                                                   : LexOrdering::Less;
  }
  if (a.len == b.len) return LexOrdering::Equal;
  return LexOrdering::Incomparable;
}

namespace {

// Reachability of "r more factors after last factor (s,e), tiling to the
// end": memo value 0 = unknown, 1 = yes, -1 = no.
struct DivisionSearch {
  const Word& w;
  const LcpTable& lcp;
  std::size_t n;
  std::map<std::tuple<std::size_t, std::size_t, int>, int> memo;

  bool feasible(std::size_t s, std::size_t e, int remaining) {
    if (remaining == 0) return e == w.size();
    auto key = std::make_tuple(s, e, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second > 0;
    bool ok = false;
    for (std::size_t e2 = e + 1; e2 + (remaining - 1) <= w.size() && !ok; ++e2) {
      if (lcp.compare_spans({s, e - s}, {e, e2 - e}) != LexOrdering::Greater)
        continue;
      ok = feasible(e, e2, remaining - 1);
    }
    memo[key] = ok ? 1 : -1;
    return ok;
  }

  // Extends the witness greedily with the smallest feasible cut each step.
  void build(std::size_t s, std::size_t e, int remaining, std::vector<Span>& out) {
    out.push_back({s, e - s});
    if (remaining == 0) return;
    for (std::size_t e2 = e + 1; e2 + (remaining - 1) <= w.size(); ++e2) {
      if (lcp.compare_spans({s, e - s}, {e, e2 - e}) != LexOrdering::Greater)
        continue;
      if (feasible(e, e2, remaining - 1)) {
        build(e, e2, remaining - 1, out);
        return;
      }
    }
    throw std::logic_error("division witness reconstruction failed");
  }
};

}  // namespace

std::optional<DivisionWitness> is_n_divisible(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::size_t un = static_cast<std::size_t>(n);
  if (w.size() < un) return std::nullopt;
  LcpTable lcp(w);
  DivisionSearch search{w, lcp, w.size(), {}};
  for (std::size_t prefix = 0; prefix + un <= w.size(); ++prefix) {
    for (std::size_t e = prefix + 1; e + (un - 1) <= w.size(); ++e) {
      if (!search.feasible(prefix, e, n - 1)) continue;
      DivisionWitness witness;
      witness.prefix_len = prefix;
      search.build(prefix, e, n - 1, witness.factors);
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<TailWitness> is_tail_n_divisible(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::size_t len = w.size();
  if (len < static_cast<std::size_t>(n)) return std::nullopt;
  LcpTable lcp(w);
  auto tail_greater = [&](std::size_t i, std::size_t j) {
    return lcp.compare_spans({i, len - i}, {j, len - j}) == LexOrdering::Greater;
  };
  // chain[i] = longest strictly decreasing tail chain starting at position i
  std::vector<int> chain(len, 1);
  for (std::size_t i = len; i-- > 0;)
    for (std::size_t j = i + 1; j < len; ++j)
      if (tail_greater(i, j)) chain[i] = std::max(chain[i], 1 + chain[j]);
  int best = *std::max_element(chain.begin(), chain.end());
  if (best < n) return std::nullopt;
  TailWitness witness;
  int need = n;
  std::size_t from = 0;
  while (need > 0) {
    for (std::size_t i = from; i < len; ++i) {
      if (chain[i] < need) continue;
      if (!witness.starts.empty() && !tail_greater(witness.starts.back(), i)) continue;
      witness.starts.push_back(i);
      from = i + 1;
      break;
    }
    --need;
  }
  return witness;
}

namespace {

struct StrongSearch {
  const Word& w;
  const LcpTable& lcp;
  const std::vector<Word>& basis;
  int n;
  int k_min;
  // starts_with[pos][z] = largest e with basis[z]^e a prefix of the tail at pos
  std::vector<std::vector<int>> max_power;

  StrongSearch(const Word& w_, const LcpTable& lcp_, const std::vector<Word>& basis_,
               int n_, int k_min_)
      : w(w_), lcp(lcp_), basis(basis_), n(n_), k_min(k_min_) {
    max_power.assign(w.size(), std::vector<int>(basis.size(), 0));
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t z = 0; z < basis.size(); ++z) {
        const Word& b = basis[z];
        std::size_t p = pos;
        int e = 0;
        while (p + b.size() <= w.size()) {
          bool match = true;
          for (std::size_t i = 0; i < b.size() && match; ++i)
            match = w[p + i] == b[i];
          if (!match) break;
          ++e;
          p += b.size();
        }
        max_power[pos][z] = e;
      }
  }

  bool extend(std::size_t part_start, int placed, std::vector<Span>& parts,
              std::vector<std::size_t>& zs, std::vector<int>& exps,
              std::vector<bool>& used) {
    if (placed == n) return part_start == w.size();
    for (std::size_t end = part_start + 1; end <= w.size(); ++end) {
      if (w.size() - end < static_cast<std::size_t>(n - placed - 1)) break;
      Span part{part_start, end - part_start};
      if (!parts.empty() &&
          lcp.compare_spans(parts.back(), part) != LexOrdering::Greater)
        continue;
      for (std::size_t z = 0; z < basis.size(); ++z) {
        if (used[z]) continue;
        int e = max_power[part_start][z];
        if (e < k_min) continue;
        if (basis[z].size() * static_cast<std::size_t>(k_min) > part.len) continue;
        parts.push_back(part);
        zs.push_back(z);
        exps.push_back(std::min<int>(e, static_cast<int>(part.len / basis[z].size())));
        used[z] = true;
        if (extend(end, placed + 1, parts, zs, exps, used)) return true;
        used[z] = false;
        parts.pop_back();
        zs.pop_back();
        exps.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<StrongDivisionWitness> is_strongly_n_divisible(
    const Word& w, int n, const std::vector<Word>& basis, int k_min) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (basis.empty()) throw std::invalid_argument("basis must be non-empty");
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  for (const Word& z : basis) {
    if (z.empty()) throw std::invalid_argument("basis words must be non-empty");
    if (z.alphabet_size() != w.alphabet_size())
      throw std::invalid_argument("alphabet mismatch in basis");
  }
  if (static_cast<std::size_t>(n) > basis.size()) return std::nullopt;
  LcpTable lcp(w);
  StrongSearch search(w, lcp, basis, n, k_min);
  std::vector<Span> parts;
  std::vector<std::size_t> zs;
  std::vector<int> exps;
  std::vector<bool> used(basis.size(), false);
  for (std::size_t w0_len = 0; w0_len + n <= w.size() + 0u; ++w0_len) {
    if (search.extend(w0_len, 0, parts, zs, exps, used)) {
      StrongDivisionWitness witness;
      witness.parts = parts;
      for (std::size_t z : zs) witness.basis.push_back(basis[z]);
      witness.exponents = exps;
      return witness;
    }
  }
  return std::nullopt;
}

NdVerdict is_nd_reducible(const Word& w, int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("n and d must be >= 1");
  NdVerdict verdict;
  if (auto division = is_n_divisible(w, n)) {
    verdict.kind = NdVerdict::Kind::NDivisible;
    verdict.division = std::move(division);
    return verdict;
  }
  if (auto power = contains_power(w, d)) {
    verdict.kind = NdVerdict::Kind::HasPower;
    verdict.power = std::move(power);
    return verdict;
  }
  return verdict;
}

}  // namespace wordlab
