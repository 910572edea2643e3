#include "wreath/budget.hpp"

#include <cstdlib>
#include <string>

namespace wreath {

namespace {

void override_from(const char* name, std::uint64_t& field) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    try {
      field = std::stoull(v);
    } catch (...) {
      // unparsable values leave the default in place
    }
  }
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  override_from("WREATHCOUNT_MAX_ORDER", b.max_group_order);
  override_from("WREATHCOUNT_MAX_COLORINGS", b.max_coloring_space);
  override_from("WREATHCOUNT_MAX_LIFT", b.max_lift_degree);
  override_from("WREATHCOUNT_MAX_BRUTE", b.max_brute_order);
  return b;
}

}  // namespace wreath
