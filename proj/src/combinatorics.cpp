#include "wreath/combinatorics.hpp"

#include <mutex>

#include "wreath/errors.hpp"

namespace wreath {

std::size_t Partition::size() const {
  std::size_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::size_t Partition::multiplicity(std::size_t i) const {
  std::size_t c = 0;
  for (auto p : parts) c += p == i;
  return c;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class partition_count(std::size_t n) {
  static std::mutex mu;
  static std::vector<mpz_class> memo{1};
  std::lock_guard lock(mu);
  while (memo.size() <= n) {
    const long m = static_cast<long>(memo.size());
    mpz_class total = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      const long g2 = j * (3 * j + 1) / 2;
      mpz_class term = memo[m - g1];
      if (g2 <= m) term += memo[m - g2];
      if (sign > 0)
        total += term;
      else
        total -= term;
    }
    memo.push_back(total);
  }
  return memo[n];
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn) {
  Partition p;
  if (n == 0) {
    fn(p);
    return;
  }
  // reverse-lex successor on the parts vector
  p.parts = {n};
  for (;;) {
    fn(p);
    auto& a = p.parts;
    // drop trailing ones
    std::size_t ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    std::size_t last = a.back() - 1;
    a.back() = last;
    std::size_t rem = ones + 1;
    while (rem >= last) {
      a.push_back(last);
      rem -= last;
    }
    if (rem > 0) a.push_back(rem);
  }
}

std::vector<Partition> partition_enum(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

mpz_class stirling_first(std::size_t j, std::size_t m) {
  if (j > m) return 0;
  // row-by-row recurrence c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j)
  std::vector<mpz_class> row{1};
  for (std::size_t r = 1; r <= m; ++r) {
    std::vector<mpz_class> next(r + 1, 0);
    for (std::size_t c = 0; c <= r; ++c) {
      if (c >= 1) next[c] += row[c - 1];
      if (c < row.size()) next[c] += row[c] * static_cast<unsigned long>(r - 1);
    }
    row = std::move(next);
  }
  return row[j];
}

mpz_class weak_composition_count(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("weak compositions need k >= 1");
  return binomial(n + k - 1, k - 1);
}

mpz_class fix_subsets_formula(const CycleType& ct, std::size_t ell) {
  if (ell > kMaxFormulaEll)
    throw BudgetExceeded("max_formula_ell",
                         "fixed-subset formula limited to l <= " + std::to_string(kMaxFormulaEll));
  mpz_class total = 0;
  for_each_partition(ell, [&](const Partition& lambda) {
    mpz_class term = 1;
    std::size_t i = 0;
    while (i < lambda.parts.size() && term != 0) {
      const std::size_t len = lambda.parts[i];
      std::size_t mult = 0;
      while (i < lambda.parts.size() && lambda.parts[i] == len) {
        ++mult;
        ++i;
      }
      term *= binomial(ct.multiplicity(len), mult);
    }
    total += term;
  });
  return total;
}

mpz_class tuples_of_partitions_count(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  // coefficient of q^n in P(q)^k, P the partition generating function
  std::vector<mpz_class> p(n + 1);
  for (std::size_t i = 0; i <= n; ++i) p[i] = partition_count(i);
  std::vector<mpz_class> acc(n + 1, 0);
  acc[0] = 1;
  for (std::uint64_t f = 0; f < k; ++f) {
    std::vector<mpz_class> next(n + 1, 0);
    for (std::size_t a = 0; a <= n; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; a + b <= n; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = std::move(next);
  }
  return acc[n];
}

mpz_class class_size_in_symmetric(const CycleType& ct) {
  mpz_class denom = 1;
  for (auto [len, mult] : ct.alpha) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), len, mult);
    denom *= pw * factorial(mult);
  }
  return factorial(ct.degree()) / denom;
}

CycleType cycle_type_of(const Partition& p) {
  CycleType ct;
  for (auto part : p.parts) ++ct.alpha[part];
  return ct;
}

Permutation permutation_of_type(const Partition& p) {
  const std::size_t n = p.size();
  std::vector<Point> img(n);
  Point start = 0;
  for (auto len : p.parts) {
    for (std::size_t i = 0; i < len; ++i)
      img[start + i] = static_cast<Point>(start + (i + 1) % len);
    start += static_cast<Point>(len);
  }
  return Permutation::unchecked(std::move(img));
}

}  // namespace wreath
