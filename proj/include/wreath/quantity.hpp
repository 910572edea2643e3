#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace wreath {

/// A nonnegative real that is either exact (rational) or a binary64
/// approximation carried as log2 so it cannot overflow.
class Quantity {
public:
  Quantity() : exact_(mpq_class(0)) {}
  Quantity(const mpz_class& z) : exact_(mpq_class(z)) {}  // NOLINT: implicit on purpose
  Quantity(const mpq_class& q) : exact_(q) { exact_->canonicalize(); }  // NOLINT
  static Quantity approx_log2(double log2_value);
  static Quantity approx(double value);

  bool is_exact() const noexcept { return exact_.has_value(); }
  const mpq_class& exact() const { return *exact_; }
  double log2() const;
  /// Value as double (may be inf).
  double to_double() const;
  /// Exact: "p" or "p/q". Approximate: %.12g, or "2^x" when beyond binary64.
  std::string to_string() const;

  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, const Quantity& b);

private:
  std::optional<mpq_class> exact_;
  double log2_ = 0.0;
};

/// log2 of a positive integer without converting it to double.
double log2_of(const mpz_class& z);
double log2_of(const mpq_class& q);

enum class Verdict { holds, fails, indeterminate, not_evaluated };
const char* to_string(Verdict v);

enum class Relation { less, equal, greater, indeterminate };

/// Exact when both sides are exact; otherwise a binary64 comparison where
/// |a - b| <= 1e-9 * max(1, |b|) is reported as indeterminate.
Relation compare(const Quantity& a, const Quantity& b);

inline constexpr double kRelativeTolerance = 1e-9;

}  // namespace wreath
