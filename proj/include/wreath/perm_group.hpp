#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wreath/budget.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

/// Construction metadata attached by the family constructors. Lets closed
/// forms and large-base matching work without enumerating the group.
struct FamilyInfo {
  std::string name;
  std::vector<std::uint64_t> params;
  std::string spec;
  std::optional<mpz_class> order;  // known without closure
};

/// Indices into PermGroup::elements(), sorted ascending.
using ElementSet = std::vector<std::uint32_t>;

/// A permutation group given by generators. The full element list is
/// materialized on first use (write-once, thread-safe) and then immutable;
/// copies share the same storage.
class PermGroup {
public:
  PermGroup() = default;
  /// Generators must be nonempty and of one degree (DegreeMismatch).
  PermGroup(std::vector<Permutation> generators, Budget budget = {},
            std::optional<FamilyInfo> family = std::nullopt);

  /// Wraps an already closed element list (identity included). Generators
  /// are picked greedily from the list.
  static PermGroup from_closed_set(std::size_t degree,
                                   std::vector<Permutation> elements,
                                   Budget budget = {});

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const std::optional<FamilyInfo>& family() const;
  const Budget& budget() const;

  bool materialized() const;
  /// Throws BudgetExceeded if the closure outgrows budget.max_group_order.
  const std::vector<Permutation>& elements() const;
  std::size_t size() const { return elements().size(); }
  /// From family metadata when available, otherwise |elements()|.
  mpz_class order() const;

  std::optional<std::uint32_t> index_of(const Permutation& p) const;
  std::uint32_t identity_index() const;
  bool is_trivial() const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

private:
  struct State;
  std::shared_ptr<State> state_;
  void materialize() const;
};

/// Materializes <generators>. Errors: DegreeMismatch, BudgetExceeded.
PermGroup closure_elements(const std::vector<Permutation>& generators,
                           const Budget& budget = {});

/// Conjugacy classes as element-index sets, ordered by smallest member.
std::vector<ElementSet> conjugacy_classes(const PermGroup& g);

/// k(G): orbits of G on itself under conjugation by the generators.
mpz_class class_count(const PermGroup& g);

/// k(T) for the subgroup T of `parent` with the given element indices.
mpz_class class_count(const PermGroup& parent, std::span<const std::uint32_t> members);

/// Generating set for the subgroup with the given members, chosen greedily.
std::vector<std::uint32_t> subgroup_generators(const PermGroup& parent,
                                               std::span<const std::uint32_t> members);

/// Subgroup of `parent` generated by the listed element indices.
ElementSet generated_subgroup(const PermGroup& parent,
                              std::span<const std::uint32_t> generator_indices);

/// Materialized subgroup from member indices of `parent`.
PermGroup subgroup(const PermGroup& parent, std::span<const std::uint32_t> members);

/// Point orbits, each sorted, ordered by smallest point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
std::vector<Point> orbit(const PermGroup& g, Point p);

PermGroup point_stabilizer(const PermGroup& g, Point p);
ElementSet point_stabilizer_indices(const PermGroup& g, Point p);

/// {h : c(h(i)) = c(i) for all i}. Coloring length must equal the degree.
PermGroup coloring_stabilizer(const PermGroup& g, std::span<const std::uint32_t> coloring);
ElementSet coloring_stabilizer_indices(const PermGroup& g,
                                       std::span<const std::uint32_t> coloring);

bool is_abelian(const PermGroup& g);

}  // namespace wreath
