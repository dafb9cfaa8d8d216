#include "wordlab/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wordlab/poset.hpp"

namespace wordlab {

void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || static_cast<std::size_t>(v) > p.size() || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

std::size_t Tableau::cells() const {
  std::size_t c = 0;
  for (const auto& row : rows) c += row.size();
  return c;
}

bool Tableau::is_standard() const {
  std::size_t n = cells();
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) return false;
      seen[v - 1] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

namespace {

// Returns the row where insertion ended.
std::size_t row_insert(Tableau& t, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == t.rows.size()) t.rows.emplace_back();
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(*it, x);  // bump the least entry greater than x
  }
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const Permutation& p) {
  validate_permutation(p);
  Tableau P, Q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t r = row_insert(P, p[i]);
    if (r == Q.rows.size()) Q.rows.emplace_back();
    Q.rows[r].push_back(static_cast<int>(i + 1));
  }
  return {P, Q};
}

Permutation inverse_rsk(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw std::invalid_argument("shape mismatch");
  if (!P.is_standard() || !Q.is_standard())
    throw std::invalid_argument("tableaux must be standard");
  Tableau work = P;
  Tableau recorder = Q;
  std::size_t n = P.cells();
  Permutation p(n);
  for (int step = static_cast<int>(n); step >= 1; --step) {
    std::size_t row = work.rows.size();
    for (std::size_t r = 0; r < recorder.rows.size(); ++r)
      if (!recorder.rows[r].empty() && recorder.rows[r].back() == step) {
        row = r;
        break;
      }
    if (row == work.rows.size()) throw std::invalid_argument("broken recorder");
    recorder.rows[row].pop_back();
    int carry = work.rows[row].back();
    work.rows[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      auto& above = work.rows[r];
      auto it = std::lower_bound(above.begin(), above.end(), carry);
      --it;  // rightmost entry smaller than carry
      std::swap(*it, carry);
    }
    p[step - 1] = carry;
  }
  return p;
}

int lds_length(const Permutation& p) {
  validate_permutation(p);
  std::vector<int> best(p.size(), 1);
  int result = p.empty() ? 0 : 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (p[j] > p[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

BigInt hook_count(const std::vector<int>& shape) {
  int n = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1) throw std::invalid_argument("shape parts must be positive");
    if (i > 0 && shape[i] > shape[i - 1])
      throw std::invalid_argument("shape parts must be decreasing");
    n += shape[i];
  }
  BigInt product = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      int arm = shape[r] - c - 1;
      int leg = 0;
      for (std::size_t r2 = r + 1; r2 < shape.size(); ++r2)
        if (shape[r2] > c) ++leg;
      product *= arm + leg + 1;
    }
  BigInt f = factorial(n);
  if (f % product != 0) throw std::logic_error("hook product must divide n!");
  return f / product;
}

std::vector<std::vector<int>> partitions_with_rows(int n, int max_rows) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part, int rows_left) -> void {
    if (remaining == 0) {
      out.push_back(parts);
      return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part, rows_left - 1);
      parts.pop_back();
    }
  };
  rec(rec, n, n, max_rows);
  return out;
}

std::vector<BigInt> lds_distribution(int n) {
  if (n < 1 || n > 10)
    throw std::domain_error("brute-force enumeration supports 1 <= n <= 10");
  std::vector<BigInt> count(n + 1, 0);
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    ++count[lds_length(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

BigInt xi_bruteforce(int k, int n) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  auto dist = lds_distribution(n);
  BigInt total = 0;
  for (int j = 1; j <= std::min(k, n); ++j) total += dist[j];
  return total;
}

BigInt xi_hook(int k, int n) {
  if (k < 1 || n < 0) throw std::domain_error("xi_hook requires k >= 1, n >= 0");
  BigInt total = 0;
  for (const auto& shape : partitions_with_rows(n, k)) {
    BigInt f = hook_count(shape);
    total += f * f;
  }
  return total;
}

BigInt gessel_xi3(int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  BigRat sum = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt numerator = binomial(2 * k, k) * binomial(n, k) * binomial(n, k) *
                       (BigInt(3) * k * k + 2 * k + 1 - n - BigInt(2) * k * n);
    BigInt denominator = BigInt(k + 1) * (k + 1) * (k + 2) * (n - k + 1);
    sum += BigRat(numerator, denominator);
  }
  sum *= 2;
  if (denominator(sum) != 1)
    throw std::logic_error("gessel sum must collapse to an integer");
  return numerator(sum);
}

namespace {

// Truncated power series over exact rationals.
struct Series {
  std::vector<BigRat> c;  // c[i] is the coefficient of x^i

  static Series zero(std::size_t deg) { return Series{std::vector<BigRat>(deg + 1, 0)}; }

  Series operator*(const Series& o) const {
    Series r = zero(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; i + j < c.size(); ++j) {
        if (o.c[j] == 0) continue;
        r.c[i + j] += c[i] * o.c[j];
      }
    }
    return r;
  }
  Series& operator+=(const Series& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
};

Series bessel_series(int index, std::size_t deg) {
  Series b = Series::zero(deg);
  for (int t = 0;; ++t) {
    std::size_t power = 2 * t + index;
    if (power > deg) break;
    b.c[power] = BigRat(1, factorial(t) * factorial(t + index));
  }
  return b;
}

Series det_recursive(const std::vector<std::vector<Series>>& m, std::size_t row,
                     unsigned cols_left, std::size_t deg,
                     std::map<unsigned, Series>& memo) {
  if (cols_left == 0) {
    Series one = Series::zero(deg);
    one.c[0] = 1;
    return one;
  }
  auto it = memo.find(cols_left);
  if (it != memo.end()) return it->second;
  Series result = Series::zero(deg);
  int sign = 1;
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (!(cols_left & (1u << col))) continue;
    Series sub = det_recursive(m, row + 1, cols_left & ~(1u << col), deg, memo);
    Series term = m[row][col] * sub;
    if (sign > 0)
      result += term;
    else
      result -= term;
    sign = -sign;
  }
  memo.emplace(cols_left, result);
  return result;
}

}  // namespace

std::vector<BigInt> xi_series(int k, int n_max) {
  if (k < 1 || k > 20) throw std::domain_error("series path supports 1 <= k <= 20");
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");
  std::size_t deg = 2 * static_cast<std::size_t>(n_max);
  std::vector<std::vector<Series>> matrix(
      k, std::vector<Series>(k, Series::zero(deg)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) matrix[i][j] = bessel_series(std::abs(i - j), deg);
  std::map<unsigned, Series> memo;
  Series u = det_recursive(matrix, 0, (1u << k) - 1, deg, memo);
  std::vector<BigInt> xs;
  for (int n = 0; n <= n_max; ++n) {
    BigInt fn = factorial(n);
    BigRat value = u.c[2 * n] * fn * fn;
    if (denominator(value) != 1)
      throw std::logic_error("series coefficient must be integral");
    xs.push_back(numerator(value));
  }
  return xs;
}

BigInt delta_count(int k, int n) {
  if (k < 1 || n < 1) throw std::domain_error("delta requires k, n >= 1");
  BigInt total = 0;
  for (const auto& shape : partitions_with_rows(n, k)) total += hook_count(shape);
  return total;
}

namespace {

std::string canonical_relation(const std::vector<std::vector<bool>>& rel) {
  std::size_t n = rel.size();
  // refinement invariant: (down-set size, up-set size) per vertex
  std::vector<std::pair<int, int>> degree(n, {0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) {
        ++degree[i].first;
        ++degree[j].second;
      }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  std::string best;
  std::vector<std::size_t> label(n);
  // permute only within equal-invariant blocks
  auto render = [&]() {
    std::string s(n * n, '0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) s[label[i] * n + label[j]] = '1';
    return s;
  };
  std::vector<std::size_t> perm = order;
  do {
    bool compatible = true;
    for (std::size_t i = 0; i < n && compatible; ++i)
      compatible = degree[perm[i]] == degree[order[i]];
    if (!compatible) continue;
    for (std::size_t i = 0; i < n; ++i) label[perm[i]] = i;
    std::string s = render();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end(),
                                 [&](std::size_t a, std::size_t b) {
                                   return degree[a] != degree[b] ? degree[a] < degree[b]
                                                                 : a < b;
                                 }));
  return best;
}

}  // namespace

std::map<int, BigInt> count_perm_ordered_posets(int n) {
  if (n < 1 || n > 7)
    throw std::domain_error("poset enumeration supports 1 <= n <= 7");
  std::map<std::string, int> widths;  // canonical form -> antichain width
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] < p[j]) {
          rel[i][j] = true;
          pairs.emplace_back(i, j);
        }
    std::string canon = canonical_relation(rel);
    if (!widths.count(canon))
      widths[canon] = static_cast<int>(poset_width(Poset(n, pairs)));
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<int, BigInt> buckets;
  for (const auto& [canon, width] : widths) buckets[width] += 1;
  return buckets;
}

BigInt multilinear_count(int l, int n, int k) {
  if (n > l) throw std::domain_error("multilinear count requires n <= l");
  if (n < 0 || l < 1) throw std::domain_error("bad arguments");
  return binomial(l, n) * xi_hook(k, n);
}

}  // namespace wordlab
