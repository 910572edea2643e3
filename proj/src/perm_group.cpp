#include "wreath/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <atomic>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wreath/errors.hpp"
#include "union_find.hpp"

namespace wreath {

struct PermGroup::State {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<FamilyInfo> family;
  Budget budget;

  std::once_flag once;
  std::atomic<bool> ready{false};
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::uint32_t identity = 0;
};

PermGroup::PermGroup(std::vector<Permutation> generators, Budget budget,
                     std::optional<FamilyInfo> family)
    : state_(std::make_shared<State>()) {
  if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
  const std::size_t d = generators.front().degree();
  if (d == 0) throw InvalidArgument("degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != d) throw DegreeMismatch("generators have different degrees");
  state_->degree = d;
  state_->generators = std::move(generators);
  state_->budget = budget;
  state_->family = std::move(family);
}

PermGroup PermGroup::from_closed_set(std::size_t degree, std::vector<Permutation> elements,
                                     Budget budget) {
  PermGroup g;
  g.state_ = std::make_shared<State>();
  auto& st = *g.state_;
  st.degree = degree;
  st.budget = budget;
  st.elements = std::move(elements);
  st.index.reserve(st.elements.size());
  for (std::uint32_t i = 0; i < st.elements.size(); ++i) {
    if (st.elements[i].degree() != degree) throw DegreeMismatch("element degree mismatch");
    st.index.emplace(st.elements[i], i);
  }
  auto id = st.index.find(Permutation::identity(degree));
  if (id == st.index.end()) throw InvalidArgument("closed set lacks the identity");
  st.identity = id->second;
  std::call_once(st.once, [&] { st.ready = true; });

  ElementSet all(st.elements.size());
  std::iota(all.begin(), all.end(), 0u);
  for (auto i : subgroup_generators(g, all)) st.generators.push_back(st.elements[i]);
  if (st.generators.empty()) st.generators.push_back(Permutation::identity(degree));
  return g;
}

std::size_t PermGroup::degree() const { return state_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return state_->generators; }
const std::optional<FamilyInfo>& PermGroup::family() const { return state_->family; }
const Budget& PermGroup::budget() const { return state_->budget; }
bool PermGroup::materialized() const { return state_ && state_->ready; }

void PermGroup::materialize() const {
  auto& st = *state_;
  std::call_once(st.once, [&st] {
    std::vector<Permutation> elems;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    auto id = Permutation::identity(st.degree);
    index.emplace(id, 0);
    elems.push_back(std::move(id));
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : st.generators) {
        Permutation p = compose(g, elems[head]);
        if (index.contains(p)) continue;
        if (elems.size() >= st.budget.max_group_order)
          throw BudgetExceeded("max_group_order",
                               "group order exceeds " + std::to_string(st.budget.max_group_order));
        index.emplace(p, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
    st.elements = std::move(elems);
    st.index = std::move(index);
    st.identity = 0;
    st.ready = true;
  });
}

const std::vector<Permutation>& PermGroup::elements() const {
  materialize();
  return state_->elements;
}

mpz_class PermGroup::order() const {
  if (state_->family && state_->family->order) return *state_->family->order;
  return mpz_class(static_cast<unsigned long>(elements().size()));
}

std::optional<std::uint32_t> PermGroup::index_of(const Permutation& p) const {
  materialize();
  auto it = state_->index.find(p);
  if (it == state_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::identity_index() const {
  materialize();
  return state_->identity;
}

bool PermGroup::is_trivial() const {
  return std::all_of(state_->generators.begin(), state_->generators.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

PermGroup closure_elements(const std::vector<Permutation>& generators, const Budget& budget) {
  PermGroup g(generators, budget);
  g.elements();
  return g;
}

namespace {

std::uint32_t must_index(const PermGroup& g, const Permutation& p) {
  auto i = g.index_of(p);
  if (!i) throw Error("element left the group; closure is inconsistent");
  return *i;
}

}  // namespace

std::vector<ElementSet> conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  detail::UnionFind uf(elems.size());
  for (std::uint32_t x = 0; x < elems.size(); ++x)
    for (const auto& s : g.generators()) uf.unite(x, must_index(g, conjugate(elems[x], s)));
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<ElementSet> classes;
  for (std::uint32_t x = 0; x < elems.size(); ++x) {
    auto [it, fresh] = slot.emplace(uf.find(x), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(x);
  }
  return classes;
}

mpz_class class_count(const PermGroup& g) {
  const auto& elems = g.elements();
  detail::UnionFind uf(elems.size());
  for (std::uint32_t x = 0; x < elems.size(); ++x)
    for (const auto& s : g.generators()) uf.unite(x, must_index(g, conjugate(elems[x], s)));
  return mpz_class(static_cast<unsigned long>(uf.components()));
}

ElementSet generated_subgroup(const PermGroup& parent,
                              std::span<const std::uint32_t> generator_indices) {
  const auto& elems = parent.elements();
  std::unordered_set<std::uint32_t> seen{parent.identity_index()};
  ElementSet members{parent.identity_index()};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto gi : generator_indices) {
      auto p = must_index(parent, compose(elems[gi], elems[members[head]]));
      if (seen.insert(p).second) members.push_back(p);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint32_t> subgroup_generators(const PermGroup& parent,
                                               std::span<const std::uint32_t> members) {
  std::vector<std::uint32_t> gens;
  std::unordered_set<std::uint32_t> current{parent.identity_index()};
  for (auto m : members) {
    if (current.contains(m)) continue;
    gens.push_back(m);
    auto sub = generated_subgroup(parent, gens);
    current = std::unordered_set<std::uint32_t>(sub.begin(), sub.end());
    if (current.size() == members.size()) break;
  }
  return gens;
}

mpz_class class_count(const PermGroup& parent, std::span<const std::uint32_t> members) {
  if (members.size() <= 1) return 1;
  const auto& elems = parent.elements();
  auto gens = subgroup_generators(parent, members);
  bool abelian = true;
  for (std::size_t a = 0; a < gens.size() && abelian; ++a)
    for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
      abelian = compose(elems[gens[a]], elems[gens[b]]) == compose(elems[gens[b]], elems[gens[a]]);
  if (abelian) return mpz_class(static_cast<unsigned long>(members.size()));

  std::unordered_map<std::uint32_t, std::uint32_t> local;
  local.reserve(members.size());
  for (std::uint32_t i = 0; i < members.size(); ++i) local.emplace(members[i], i);
  detail::UnionFind uf(members.size());
  for (std::uint32_t i = 0; i < members.size(); ++i)
    for (auto gi : gens)
      uf.unite(i, local.at(must_index(parent, conjugate(elems[members[i]], elems[gi]))));
  return mpz_class(static_cast<unsigned long>(uf.components()));
}

PermGroup subgroup(const PermGroup& parent, std::span<const std::uint32_t> members) {
  const auto& elems = parent.elements();
  std::vector<Permutation> sub;
  sub.reserve(members.size());
  for (auto i : members) sub.push_back(elems[i]);
  return PermGroup::from_closed_set(parent.degree(), std::move(sub), parent.budget());
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  detail::UnionFind uf(n);
  for (const auto& s : g.generators())
    for (Point i = 0; i < n; ++i) uf.unite(i, s(i));
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<Point>> out;
  for (Point i = 0; i < n; ++i) {
    auto [it, fresh] = slot.emplace(uf.find(i), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

std::vector<Point> orbit(const PermGroup& g, Point p) {
  for (auto& o : orbits(g))
    if (std::binary_search(o.begin(), o.end(), p)) return o;
  throw InvalidArgument("point out of range");
}

ElementSet point_stabilizer_indices(const PermGroup& g, Point p) {
  if (p >= g.degree()) throw InvalidArgument("point out of range");
  ElementSet out;
  const auto& elems = g.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (elems[i](p) == p) out.push_back(i);
  return out;
}

PermGroup point_stabilizer(const PermGroup& g, Point p) {
  return subgroup(g, point_stabilizer_indices(g, p));
}

ElementSet coloring_stabilizer_indices(const PermGroup& g,
                                       std::span<const std::uint32_t> coloring) {
  if (coloring.size() != g.degree()) throw DegreeMismatch("coloring length differs from degree");
  ElementSet out;
  const auto& elems = g.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    const auto& h = elems[i];
    bool fixes = true;
    for (Point j = 0; j < coloring.size() && fixes; ++j) fixes = coloring[h(j)] == coloring[j];
    if (fixes) out.push_back(i);
  }
  return out;
}

PermGroup coloring_stabilizer(const PermGroup& g, std::span<const std::uint32_t> coloring) {
  return subgroup(g, coloring_stabilizer_indices(g, coloring));
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (compose(gens[a], gens[b]) != compose(gens[b], gens[a])) return false;
  return true;
}

}  // namespace wreath
