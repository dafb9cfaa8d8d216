#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wordlab/bounds.hpp"

namespace wordlab {

// One-line notation, a bijection on 1..n.
using Permutation = std::vector<int>;

void validate_permutation(const Permutation& p);

struct Tableau {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  std::size_t cells() const;
  // Entries 1..n each once, rows and columns strictly increasing.
  bool is_standard() const;
  bool operator==(const Tableau&) const = default;
};

// Schensted row insertion; Q records insertion order. shape(P) == shape(Q).
std::pair<Tableau, Tableau> rsk(const Permutation& p);

// Inverse of rsk; throws on shape mismatch or non-standard input.
Permutation inverse_rsk(const Tableau& P, const Tableau& Q);

// Longest strictly decreasing subsequence length (= row count of rsk(p).first).
int lds_length(const Permutation& p);

// Number of standard tableaux of the shape, by the hook-length formula.
BigInt hook_count(const std::vector<int>& shape);

// All partitions of n into at most max_rows parts (decreasing part lists).
std::vector<std::vector<int>> partitions_with_rows(int n, int max_rows);

// count[j] = number of permutations in S_n with lds_length == j (index 0 unused).
std::vector<BigInt> lds_distribution(int n);

// #{pi in S_n : lds_length(pi) <= k}, by explicit enumeration.
BigInt xi_bruteforce(int k, int n);

// Same count as sum of squared hook counts over shapes with <= k rows.
BigInt xi_hook(int k, int n);

// Closed-form summation for k = 3; exact (the rational sum is integral).
BigInt gessel_xi3(int n);

// Coefficients xi_k(0..n_max) extracted from the truncated power-series
// determinant U_k = det(b_|i-j|), b_i = sum_t x^(2t+i) / (t! (t+i)!).
std::vector<BigInt> xi_series(int k, int n_max);

// Number of standard tableaux with n cells and at most k rows.
BigInt delta_count(int k, int n);

// Per-antichain-width counts of n-element posets that arise as the
// intersection of two linear orders, up to isomorphism.
std::map<int, BigInt> count_perm_ordered_posets(int n);

// C(l, n) * xi_hook(k, n); requires n <= l.
BigInt multilinear_count(int l, int n, int k);

}  // namespace wordlab
