#include "wreath/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include <omp.h>

#include "wreath/combinatorics.hpp"
#include "wreath/errors.hpp"

namespace wreath::kernels {

int max_threads() { return omp_get_max_threads(); }
void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

ColoringAction::ColoringAction(const PermGroup& h, std::uint32_t k)
    : h_(h), k_(k), n_(h.degree()) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), k, n_);
  if (space > mpz_class(std::numeric_limits<std::uint64_t>::max() >> 2))
    throw BudgetExceeded("max_scan_colorings", "coloring space k^n does not fit 62 bits");
  space_ = mpz_get_ui(space.get_mpz_t());
  place_.resize(n_);
  std::uint64_t p = 1;
  for (std::size_t i = n_; i-- > 0;) {
    place_[i] = p;
    p *= k;
  }
}

void ColoringAction::decode(std::uint64_t code, std::span<std::uint32_t> digits) const {
  for (std::size_t i = n_; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(code % k_);
    code /= k_;
  }
}

std::uint64_t ColoringAction::apply(const Permutation& h, std::span<const std::uint32_t> digits) const {
  std::uint64_t code = 0;
  const auto img = h.images();
  for (std::size_t j = 0; j < n_; ++j) code += digits[j] * place_[img[j]];
  return code;
}

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.size();
    for (auto v : s) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class Tally {
public:
  void add(ElementSet&& stab, std::uint64_t rep) {
    auto [it, fresh] = slot_.try_emplace(stab, classes_.size());
    if (fresh) {
      StabilizerClass c;
      c.members = std::move(stab);
      c.orbits = 1;
      c.first_representative = rep;
      classes_.push_back(std::move(c));
    } else {
      auto& c = classes_[it->second];
      ++c.orbits;
      c.first_representative = std::min(c.first_representative, rep);
    }
  }
  std::vector<StabilizerClass> take() { return std::move(classes_); }

private:
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> slot_;
  std::vector<StabilizerClass> classes_;
};

// Row e holds h_e^-1, so the image of a coloring c under h_e reads
// c[inv[e][p]] at position p.
std::vector<Point> inverse_table(const std::vector<Permutation>& elems, std::size_t n) {
  std::vector<Point> inv(elems.size() * n);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    const auto img = elems[e].images();
    for (std::size_t j = 0; j < n; ++j) inv[e * n + img[j]] = static_cast<Point>(j);
  }
  return inv;
}

// Scans codes [begin, end) and tallies the lex-minimal ones. Images are
// compared digit by digit from the most significant position, so most
// elements are rejected after a few digits.
std::vector<StabilizerClass> scan_range(const ColoringAction& action, std::span<const Point> inv,
                                        std::uint64_t begin, std::uint64_t end, std::uint64_t& reps) {
  const std::size_t n = action.degree();
  const auto order = static_cast<std::uint32_t>(action.group().elements().size());
  std::vector<std::uint32_t> digits(n);
  Tally tally;
  if (begin >= end) return {};
  action.decode(begin, digits);
  const std::uint32_t k = action.k();
  for (std::uint64_t code = begin; code < end; ++code) {
    ElementSet stab;
    bool minimal = true;
    for (std::uint32_t e = 0; e < order && minimal; ++e) {
      const Point* row = inv.data() + static_cast<std::size_t>(e) * n;
      std::size_t p = 0;
      while (p < n && digits[row[p]] == digits[p]) ++p;
      if (p == n) stab.push_back(e);
      else if (digits[row[p]] < digits[p]) minimal = false;
    }
    if (minimal) {
      ++reps;
      tally.add(std::move(stab), code);
    }
    // odometer increment, last position least significant
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
  return tally.take();
}

void check_scan_budget(const ColoringAction& action) {
  const auto& budget = action.group().budget();
  if (action.space() > budget.max_scan_colorings)
    throw BudgetExceeded("max_scan_colorings",
                         "k^n exceeds " + std::to_string(budget.max_scan_colorings));
}

}  // namespace

std::vector<StabilizerClass> merge_stabilizers(std::vector<std::vector<StabilizerClass>> parts) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> slot;
  std::vector<StabilizerClass> out;
  for (auto& part : parts) {
    for (auto& c : part) {
      auto [it, fresh] = slot.try_emplace(c.members, out.size());
      if (fresh) {
        out.push_back(std::move(c));
      } else {
        auto& d = out[it->second];
        d.orbits += c.orbits;
        d.first_representative = std::min(d.first_representative, c.first_representative);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first_representative < b.first_representative;
  });
  return out;
}

namespace serial {

std::vector<std::uint64_t> sigma_histogram(const PermGroup& h) {
  std::vector<std::uint64_t> hist(h.degree() + 1, 0);
  for (const auto& e : h.elements()) ++hist[e.sigma()];
  return hist;
}

OrbitCensus lexmin_scan(const ColoringAction& action) {
  check_scan_budget(action);
  OrbitCensus census;
  census.mode = OrbitCensus::Mode::lexmin_scan;
  census.space = action.space();
  census.group_order = action.group().elements().size();
  const auto inv = inverse_table(action.group().elements(), action.degree());
  std::vector<std::vector<StabilizerClass>> parts;
  parts.push_back(scan_range(action, inv, 0, action.space(), census.total_orbits));
  census.stabilizers = merge_stabilizers(std::move(parts));
  return census;
}

OrbitCensus visited_census(const ColoringAction& action) {
  const auto& budget = action.group().budget();
  if (action.space() > budget.max_coloring_space)
    throw BudgetExceeded("max_coloring_space",
                         "k^n exceeds " + std::to_string(budget.max_coloring_space));
  const auto& elems = action.group().elements();
  OrbitCensus census;
  census.mode = OrbitCensus::Mode::visited_table;
  census.space = action.space();
  census.group_order = elems.size();

  std::vector<std::uint64_t> visited((action.space() + 63) / 64, 0);
  std::vector<std::uint32_t> digits(action.degree());
  Tally tally;
  for (std::uint64_t code = 0; code < action.space(); ++code) {
    if (visited[code >> 6] >> (code & 63) & 1) continue;
    action.decode(code, digits);
    ElementSet stab;
    for (std::uint32_t e = 0; e < elems.size(); ++e) {
      const auto img = action.apply(elems[e], digits);
      if (img == code) stab.push_back(e);
      visited[img >> 6] |= std::uint64_t{1} << (img & 63);
    }
    ++census.total_orbits;
    tally.add(std::move(stab), code);
  }
  std::vector<std::vector<StabilizerClass>> parts;
  parts.push_back(tally.take());
  census.stabilizers = merge_stabilizers(std::move(parts));
  return census;
}

void fill_class_counts(const PermGroup& h, std::vector<StabilizerClass>& stabilizers) {
  for (auto& s : stabilizers) s.class_count = class_count(h, s.members);
}

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> sigma_histogram(const PermGroup& h) {
  const auto& elems = h.elements();
  const std::size_t bins = h.degree() + 1;
  const auto count = static_cast<std::int64_t>(elems.size());
  std::vector<std::uint64_t> hist(bins, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) ++local[elems[i].sigma()];
#pragma omp critical
    for (std::size_t s = 0; s < bins; ++s) hist[s] += local[s];
  }
  return hist;
}

OrbitCensus lexmin_scan(const ColoringAction& action) {
  check_scan_budget(action);
  action.group().elements();  // materialize before fanning out
  OrbitCensus census;
  census.mode = OrbitCensus::Mode::lexmin_scan;
  census.space = action.space();
  census.group_order = action.group().elements().size();

  const std::uint64_t chunk = std::max<std::uint64_t>(1024, action.space() / (64 * static_cast<std::uint64_t>(max_threads())) + 1);
  const auto chunks = static_cast<std::int64_t>((action.space() + chunk - 1) / chunk);
  std::vector<std::vector<StabilizerClass>> parts(static_cast<std::size_t>(chunks));
  std::vector<std::uint64_t> reps(static_cast<std::size_t>(chunks), 0);
  const auto inv = inverse_table(action.group().elements(), action.degree());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(action.space(), begin + chunk);
    parts[c] = scan_range(action, inv, begin, end, reps[c]);
  }
  census.total_orbits = std::accumulate(reps.begin(), reps.end(), std::uint64_t{0});
  census.stabilizers = merge_stabilizers(std::move(parts));
  return census;
}

void fill_class_counts(const PermGroup& h, std::vector<StabilizerClass>& stabilizers) {
  h.elements();
  const auto count = static_cast<std::int64_t>(stabilizers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i)
    stabilizers[i].class_count = class_count(h, stabilizers[i].members);
}

}  // namespace omp

// ------------------------------------------------------ fixed-subset check

void fix_subset_counts(const Permutation& p, std::vector<std::uint64_t>& out,
                       std::vector<std::uint32_t>& image) {
  const std::size_t m = p.degree();
  const std::uint32_t full = 1u << m;
  image.resize(full);
  out.assign(m + 1, 0);
  image[0] = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    image[mask] = image[mask ^ low] | (1u << p(static_cast<Point>(std::countr_zero(low))));
    if (image[mask] == mask) ++out[std::popcount(mask)];
  }
  out[0] = 1;
}

namespace {

struct FormulaTable {
  // keyed by the sorted cycle lengths
  std::map<std::vector<std::size_t>, std::vector<std::uint64_t>> by_type;

  explicit FormulaTable(std::size_t m) {
    for_each_partition(m, [&](const Partition& lambda) {
      const auto ct = cycle_type_of(lambda);
      std::vector<std::uint64_t> row(m + 1, 0);
      for (std::size_t ell = 1; ell <= m; ++ell) row[ell] = fix_subsets_formula(ct, ell).get_ui();
      by_type.emplace(lambda.parts, std::move(row));
    });
  }

  const std::vector<std::uint64_t>& lookup(const Permutation& p) const {
    std::vector<std::size_t> lens;
    for (auto [len, mult] : p.cycle_type().alpha) lens.insert(lens.end(), mult, len);
    std::sort(lens.rbegin(), lens.rend());
    return by_type.at(lens);
  }
};

// The permutation of {0..m-1} with lexicographic rank `rank`.
std::vector<Point> unrank_permutation(std::size_t m, std::uint64_t rank) {
  std::vector<Point> pool(m);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<std::uint64_t> fact(m + 1, 1);
  for (std::size_t i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  std::vector<Point> out;
  for (std::size_t i = m; i-- > 0;) {
    const auto q = rank / fact[i];
    rank %= fact[i];
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

FixSubsetTally tally_range(std::size_t m, const FormulaTable& table, std::uint64_t begin,
                           std::uint64_t end) {
  FixSubsetTally t;
  if (begin >= end) return t;
  auto images = unrank_permutation(m, begin);
  std::vector<std::uint64_t> counts;
  std::vector<std::uint32_t> scratch;
  for (std::uint64_t r = begin; r < end; ++r) {
    const auto p = Permutation::unchecked(images);
    fix_subset_counts(p, counts, scratch);
    const auto& expect = table.lookup(p);
    ++t.permutations;
    for (std::size_t ell = 1; ell <= m; ++ell) {
      ++t.checks;
      t.mismatches += counts[ell] != expect[ell];
    }
    std::next_permutation(images.begin(), images.end());
  }
  return t;
}

void check_fix_degree(std::size_t m) {
  if (m < 1 || m > 20) throw InvalidArgument("exhaustive fixed-subset check needs 1 <= m <= 20");
}

}  // namespace

namespace serial {
FixSubsetTally fix_subset_exhaustive(std::size_t m) {
  check_fix_degree(m);
  const FormulaTable table(m);
  return tally_range(m, table, 0, factorial(m).get_ui());
}
}  // namespace serial

namespace omp {
FixSubsetTally fix_subset_exhaustive(std::size_t m) {
  check_fix_degree(m);
  const FormulaTable table(m);
  const std::uint64_t total = factorial(m).get_ui();
  const std::uint64_t chunk = std::max<std::uint64_t>(4096, total / (32 * static_cast<std::uint64_t>(max_threads())) + 1);
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  FixSubsetTally sum;
#pragma omp parallel
  {
    FixSubsetTally local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      const auto part = tally_range(m, table, begin, std::min(total, begin + chunk));
      local.permutations += part.permutations;
      local.checks += part.checks;
      local.mismatches += part.mismatches;
    }
#pragma omp critical
    {
      sum.permutations += local.permutations;
      sum.checks += local.checks;
      sum.mismatches += local.mismatches;
    }
  }
  return sum;
}
}  // namespace omp

}  // namespace wreath::kernels
