#include "wreath/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

#include "wreath/errors.hpp"
#include "union_find.hpp"

namespace wreath {

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool is_transitive(const PermGroup& parent, std::span<const std::uint32_t> members) {
  const auto& elems = parent.elements();
  std::vector<char> hit(parent.degree(), 0);
  std::size_t count = 0;
  for (auto i : members) {
    Point img = elems[i](0);
    if (!hit[img]) {
      hit[img] = 1;
      ++count;
    }
  }
  return count == parent.degree();
}

bool is_semiregular(const PermGroup& parent, std::span<const std::uint32_t> members) {
  const auto& elems = parent.elements();
  for (auto i : members)
    if (!elems[i].is_identity() && elems[i].fixed_points() != 0) return false;
  return true;
}

bool is_semiregular(const PermGroup& g) {
  for (const auto& e : g.elements())
    if (!e.is_identity() && e.fixed_points() != 0) return false;
  return true;
}

std::vector<Point> minimal_block(const PermGroup& g, std::span<const Point> seed) {
  const std::size_t n = g.degree();
  detail::UnionFind uf(n);
  std::deque<std::pair<Point, Point>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i)
    if (uf.unite(seed[0], seed[i])) pending.emplace_back(seed[0], seed[i]);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const auto& s : g.generators()) {
      auto x = static_cast<Point>(uf.find(s(a)));
      auto y = static_cast<Point>(uf.find(s(b)));
      if (uf.unite(x, y)) pending.emplace_back(x, y);
    }
  }
  std::vector<Point> block;
  const auto root = uf.find(seed.empty() ? 0 : seed[0]);
  for (Point i = 0; i < n; ++i)
    if (uf.find(i) == root) block.push_back(i);
  return block;
}

std::vector<std::vector<Point>> blocks_containing_zero(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::set<std::vector<Point>> found{{0}};
  std::deque<std::vector<Point>> queue{{0}};
  while (!queue.empty()) {
    auto block = std::move(queue.front());
    queue.pop_front();
    std::vector<char> in(n, 0);
    for (auto p : block) in[p] = 1;
    for (Point c = 0; c < n; ++c) {
      if (in[c]) continue;
      auto seed = block;
      seed.push_back(c);
      auto next = minimal_block(g, seed);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<Point>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  const std::size_t n = g.degree();
  for (Point b = 1; b < n; ++b) {
    Point seed[2] = {0, b};
    if (minimal_block(g, seed).size() != n) return false;
  }
  return true;
}

namespace {

// Smallest normal subgroup containing the given elements.
ElementSet normal_closure(const PermGroup& parent, std::vector<std::uint32_t> gens) {
  const auto& elems = parent.elements();
  for (;;) {
    auto members = generated_subgroup(parent, gens);
    std::vector<char> in(elems.size(), 0);
    for (auto m : members) in[m] = 1;
    bool grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
      for (const auto& s : parent.generators()) {
        auto c = parent.index_of(conjugate(elems[gens[i]], s));
        if (!in[*c]) {
          gens.push_back(*c);
          grew = true;
          break;
        }
      }
    }
    if (!grew) return members;
  }
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const PermGroup& g) {
  if (g.order() > g.budget().max_normal_order)
    throw BudgetExceeded("max_normal_order", "normal subgroup enumeration needs |G| <= " +
                                                 std::to_string(g.budget().max_normal_order));
  auto classes = conjugacy_classes(g);
  const ElementSet trivial{g.identity_index()};
  std::set<ElementSet> found{trivial};
  std::deque<ElementSet> queue{trivial};
  const auto& elems = g.elements();
  while (!queue.empty()) {
    auto n = std::move(queue.front());
    queue.pop_front();
    std::vector<char> in(elems.size(), 0);
    for (auto m : n) in[m] = 1;
    auto base_gens = subgroup_generators(g, n);
    for (const auto& cls : classes) {
      if (in[cls.front()]) continue;
      auto gens = base_gens;
      gens.push_back(cls.front());
      auto m = normal_closure(g, gens);
      if (found.insert(m).second) queue.push_back(std::move(m));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

// Cayley table over element indices: at(a, b) = index of a*b.
class MultiplicationTable {
public:
  explicit MultiplicationTable(const PermGroup& g) : n_(g.elements().size()), table_(n_ * n_) {
    const auto& elems = g.elements();
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) table_[a * n_ + b] = *g.index_of(compose(elems[a], elems[b]));
  }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return table_[std::size_t{a} * n_ + b]; }

  // <base, extra> as a bitmap over element indices, where base is a subgroup
  // S generated by gens. The result is a union of left cosets rS, so only
  // coset representatives need to be multiplied by the generators.
  Bits extend(const ElementSet& base, std::span<const std::uint32_t> gens, std::uint32_t extra) const {
    Bits in((n_ + 63) / 64, 0);
    auto test = [&](std::uint32_t i) { return (in[i >> 6] >> (i & 63)) & 1; };
    for (auto m : base) in[m >> 6] |= std::uint64_t{1} << (m & 63);
    std::vector<std::uint32_t> reps{base.front()};  // any element of S stands for S
    for (std::size_t head = 0; head < reps.size(); ++head) {
      auto step = [&](std::uint32_t x) {
        const auto y = at(x, reps[head]);
        if (test(y)) return;
        reps.push_back(y);
        for (auto b : base) {
          const auto p = at(y, b);
          in[p >> 6] |= std::uint64_t{1} << (p & 63);
        }
      };
      for (auto x : gens) step(x);
      step(extra);
    }
    return in;
  }

private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001B3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

ElementSet members_of(const Bits& bits) {
  ElementSet out;
  for (std::size_t w = 0; w < bits.size(); ++w)
    for (auto word = bits[w]; word; word &= word - 1)
      out.push_back(static_cast<std::uint32_t>(64 * w + std::countr_zero(word)));
  return out;
}

}  // namespace

std::vector<ElementSet> all_subgroups(const PermGroup& g) {
  if (g.order() > g.budget().max_lattice_order)
    throw BudgetExceeded("max_lattice_order", "subgroup lattice needs |G| <= " +
                                                  std::to_string(g.budget().max_lattice_order));
  const auto& elems = g.elements();
  const MultiplicationTable table(g);
  const ElementSet trivial{g.identity_index()};
  // one generator per cyclic subgroup
  std::vector<std::uint32_t> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> cyclic;
    for (std::uint32_t x = 0; x < elems.size(); ++x)
      if (cyclic.insert(table.extend(trivial, {}, x)).second) cyclic_gens.push_back(x);
  }
  std::unordered_set<Bits, BitsHash> found{table.extend(trivial, {}, g.identity_index())};
  std::vector<ElementSet> out{trivial};
  std::deque<std::pair<ElementSet, std::vector<std::uint32_t>>> queue;
  queue.emplace_back(trivial, std::vector<std::uint32_t>{});
  std::vector<char> member(elems.size(), 0);
  while (!queue.empty()) {
    auto [s, gens] = std::move(queue.front());
    queue.pop_front();
    std::fill(member.begin(), member.end(), 0);
    for (auto m : s) member[m] = 1;
    for (auto c : cyclic_gens) {
      if (member[c]) continue;
      auto t = table.extend(s, gens, c);
      if (!found.insert(t).second) continue;
      auto next_gens = gens;
      next_gens.push_back(c);
      out.push_back(members_of(t));
      queue.emplace_back(out.back(), std::move(next_gens));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StructureReport structure_classify(const PermGroup& g) {
  StructureReport r;
  r.transitive = is_transitive(g);
  r.semiregular = is_semiregular(g);
  r.primitive = r.transitive && is_primitive(g);
  auto normals = normal_subgroups(g);
  r.normal_subgroup_count = normals.size();
  r.semiprimitive = r.transitive;
  for (const auto& n : normals) {
    if (!r.semiprimitive) break;
    r.semiprimitive = is_transitive(g, n) || is_semiregular(g, n);
  }
  return r;
}

std::size_t minimal_degree(const PermGroup& g) {
  std::size_t mu = std::numeric_limits<std::size_t>::max();
  for (const auto& e : g.elements())
    if (!e.is_identity()) mu = std::min(mu, g.degree() - e.fixed_points());
  if (mu == std::numeric_limits<std::size_t>::max())
    throw InvalidArgument("minimal degree of the trivial group is undefined");
  return mu;
}

std::size_t max_nonidentity_sigma(const PermGroup& g) {
  std::size_t best = 0;
  bool any = false;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    any = true;
    best = std::max(best, e.sigma());
  }
  if (!any) throw InvalidArgument("max sigma of the trivial group is undefined");
  return best;
}

bool contains_transposition(const PermGroup& g) {
  for (const auto& e : g.elements())
    if (g.degree() - e.fixed_points() == 2) return true;
  return false;
}

namespace {

struct BaseSearch {
  const PermGroup& g;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget;

  // Is there a base of at most `depth` further points, all >= start?
  bool search(const ElementSet& stab, Point start, std::size_t depth) {
    if (stab.size() == 1) return true;
    if (depth == 0) return false;
    if (++nodes > node_budget)
      throw BudgetExceeded("max_base_nodes", "minimal base search exceeded its node budget");
    const auto& elems = g.elements();
    const std::size_t n = g.degree();

    // orbit length of every candidate point under the current stabilizer
    std::vector<std::size_t> orbit_len(n, 0);
    {
      std::vector<char> seen(n, 0);
      for (Point p = 0; p < n; ++p) {
        if (seen[p]) continue;
        std::vector<char> hit(n, 0);
        std::size_t len = 0;
        for (auto i : stab) {
          Point q = elems[i](p);
          if (!hit[q]) {
            hit[q] = 1;
            ++len;
          }
        }
        for (Point q = 0; q < n; ++q)
          if (hit[q]) {
            seen[q] = 1;
            orbit_len[q] = len;
          }
      }
    }
    std::size_t longest = 1;
    for (Point p = start; p < n; ++p) longest = std::max(longest, orbit_len[p]);
    // each further point shrinks the stabilizer by at most its orbit length
    mpz_class reach = 1;
    for (std::size_t i = 0; i < depth; ++i) reach *= static_cast<unsigned long>(longest);
    if (reach < static_cast<unsigned long>(stab.size())) return false;

    for (Point p = start; p < n; ++p) {
      if (orbit_len[p] <= 1) continue;  // already fixed: redundant in a minimal base
      ElementSet next;
      for (auto i : stab)
        if (elems[i](p) == p) next.push_back(i);
      if (search(next, p + 1, depth - 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::size_t minimal_base_size(const PermGroup& g) {
  const auto& elems = g.elements();
  ElementSet all(elems.size());
  std::iota(all.begin(), all.end(), 0u);
  BaseSearch s{g, 0, g.budget().max_base_nodes};
  for (std::size_t depth = 0;; ++depth)
    if (s.search(all, 0, depth)) return depth;
}

mpz_class max_subgroup_class_count(const PermGroup& g) {
  mpz_class best = 0;
  for (const auto& s : all_subgroups(g)) {
    auto k = class_count(g, s);
    if (k > best) best = k;
  }
  return best;
}

NumericInvariants numeric_invariants(const PermGroup& g, bool want_e) {
  if (g.is_trivial()) throw InvalidArgument("numeric invariants need a nontrivial group");
  NumericInvariants inv;
  inv.mu = minimal_degree(g);
  inv.b = minimal_base_size(g);
  inv.max_sigma = max_nonidentity_sigma(g);
  if (want_e) inv.e = max_subgroup_class_count(g);
  return inv;
}

}  // namespace wreath
