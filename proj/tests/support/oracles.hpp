#pragma once

// Test-side reference computations. Deliberately naive and written without
// the library's algorithms so agreement means something.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline std::size_t cycles(const Perm& p) {
  std::vector<bool> seen(p.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

/// All elements, by repeated multiplication until nothing new appears.
inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> all{identity(gens.front().size())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const auto& x : snapshot)
      for (const auto& g : gens)
        if (all.insert(compose(g, x)).second) grew = true;
  }
  return all;
}

/// Orbits on colorings {0..k-1}^n by BFS over single generator steps;
/// (h.c)(h(j)) = c(j).
inline std::uint64_t orbit_count(const std::vector<Perm>& gens, std::uint32_t k) {
  const std::size_t n = gens.front().size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= k;
  std::vector<bool> seen(space);
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = n; i-- > 0;) {
      c[i] = code % k;
      code /= k;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint64_t code = 0;
    for (auto d : c) code = code * k + d;
    return code;
  };
  std::uint64_t orbits = 0;
  for (std::uint64_t s = 0; s < space; ++s) {
    if (seen[s]) continue;
    ++orbits;
    std::vector<std::uint64_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto c = decode(stack.back());
      stack.pop_back();
      for (const auto& g : gens) {
        std::vector<std::uint32_t> img(n);
        for (std::size_t j = 0; j < n; ++j) img[g[j]] = c[j];
        const auto code = encode(img);
        if (!seen[code]) {
          seen[code] = true;
          stack.push_back(code);
        }
      }
    }
  }
  return orbits;
}

/// k(G) = (1/|G|) sum over g of |C_G(g)|.
inline std::uint64_t class_count_by_centralizers(const std::set<Perm>& g) {
  std::uint64_t sum = 0;
  for (const auto& x : g)
    for (const auto& y : g)
      if (compose(x, y) == compose(y, x)) ++sum;
  return sum / g.size();
}

/// Number of permutations of m points with j cycles, by listing S_m.
inline std::uint64_t stirling_by_listing(std::size_t j, std::size_t m) {
  auto p = identity(m);
  std::uint64_t count = 0;
  do {
    count += cycles(p) == j;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Tuples (x_1..x_k) of nonnegative integers with sum n, listed.
inline std::uint64_t weak_compositions_by_listing(std::size_t n, std::size_t k) {
  if (k == 1) return 1;
  std::uint64_t total = 0;
  for (std::size_t first = 0; first <= n; ++first) total += weak_compositions_by_listing(n - first, k - 1);
  return total;
}

/// Partitions of n with parts at most `cap`.
inline std::uint64_t partitions_by_recursion(std::size_t n, std::size_t cap) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t part = std::min(n, cap); part >= 1; --part) total += partitions_by_recursion(n - part, part);
  return total;
}

/// l-subsets S of {0..m-1} with p(S) = S, by listing all subsets as bitmasks.
inline std::uint64_t fixed_subsets_by_listing(const Perm& p, std::size_t ell) {
  const std::size_t m = p.size();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != ell) continue;
    std::uint32_t img = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) img |= 1u << p[i];
    count += img == mask;
  }
  return count;
}

/// Conjugacy classes of C_k wr H as explicit pairs (v, h), counted by
/// orbit enumeration of conjugation, using (v,h)(w,g) = (v + h.w, hg).
inline std::uint64_t wreath_class_count(std::uint32_t k, const std::vector<Perm>& h_gens) {
  const auto h_set = closure(h_gens);
  const std::vector<Perm> hs(h_set.begin(), h_set.end());
  const std::size_t n = hs.front().size();
  using Elem = std::pair<std::vector<std::uint32_t>, Perm>;
  auto mul = [&](const Elem& a, const Elem& b) {
    Elem r{std::vector<std::uint32_t>(n), compose(a.second, b.second)};
    for (std::size_t i = 0; i < n; ++i) r.first[a.second[i]] = (a.first[a.second[i]] + b.first[i]) % k;
    return r;
  };
  auto inv = [&](const Elem& a) {
    Elem r{std::vector<std::uint32_t>(n), inverse(a.second)};
    for (std::size_t j = 0; j < n; ++j) r.first[j] = (k - a.first[a.second[j]]) % k;
    return r;
  };
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Elem e{std::vector<std::uint32_t>(n, 0), identity(n)};
    e.first[i] = 1 % k;
    gens.push_back(e);
  }
  for (const auto& g : h_gens) gens.push_back({std::vector<std::uint32_t>(n, 0), g});
  std::set<Elem> seen;
  std::uint64_t classes = 0;
  std::uint64_t base = 1;
  for (std::size_t i = 0; i < n; ++i) base *= k;
  for (std::uint64_t code = 0; code < base; ++code) {
    std::vector<std::uint32_t> v(n);
    auto c = code;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = c % k;
      c /= k;
    }
    for (const auto& h : hs) {
      Elem x{v, h};
      if (seen.count(x)) continue;
      ++classes;
      std::vector<Elem> stack{x};
      seen.insert(x);
      while (!stack.empty()) {
        auto y = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
          auto z = mul(mul(g, y), inv(g));
          if (seen.insert(z).second) stack.push_back(z);
        }
      }
    }
  }
  return classes;
}

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  auto p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
