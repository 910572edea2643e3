#include "wreath/quantity.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace wreath {

double log2_of(const mpz_class& z) {
  if (z <= 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double log2_of(const mpq_class& q) {
  if (q <= 0) return -std::numeric_limits<double>::infinity();
  return log2_of(mpz_class(q.get_num())) - log2_of(mpz_class(q.get_den()));
}

Quantity Quantity::approx_log2(double log2_value) {
  Quantity q;
  q.exact_.reset();
  q.log2_ = log2_value;
  return q;
}

Quantity Quantity::approx(double value) {
  return approx_log2(value <= 0 ? -std::numeric_limits<double>::infinity() : std::log2(value));
}

double Quantity::log2() const { return exact_ ? log2_of(*exact_) : log2_; }

double Quantity::to_double() const {
  if (exact_) return exact_->get_d();
  return std::exp2(log2_);
}

std::string Quantity::to_string() const {
  if (exact_) return exact_->get_str();
  char buf[64];
  if (log2_ < 1000.0) {
    std::snprintf(buf, sizeof buf, "%.12g", std::exp2(log2_));
  } else {
    std::snprintf(buf, sizeof buf, "2^%.12g", log2_);
  }
  return buf;
}

namespace {

// log2(2^a + 2^b)
double log2_add(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

}  // namespace

Quantity operator+(const Quantity& a, const Quantity& b) {
  if (a.exact_ && b.exact_) return Quantity(mpq_class(*a.exact_ + *b.exact_));
  return Quantity::approx_log2(log2_add(a.log2(), b.log2()));
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  if (a.exact_ && b.exact_) return Quantity(mpq_class(*a.exact_ * *b.exact_));
  return Quantity::approx_log2(a.log2() + b.log2());
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::indeterminate: return "indeterminate";
    case Verdict::not_evaluated: return "not-evaluated";
  }
  return "?";
}

Relation compare(const Quantity& a, const Quantity& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.exact(), b.exact());
    return c < 0 ? Relation::less : c > 0 ? Relation::greater : Relation::equal;
  }
  const double la = a.log2(), lb = b.log2();
  if (lb < 1000.0 && la < 1000.0) {
    const double x = std::exp2(la), y = std::exp2(lb);
    if (std::fabs(x - y) <= kRelativeTolerance * std::max(1.0, std::fabs(y))) return Relation::indeterminate;
    return x < y ? Relation::less : Relation::greater;
  }
  // relative difference of huge values, measured in the log domain
  const double rel = std::expm1(std::fabs(la - lb) * std::log(2.0));
  if (rel <= kRelativeTolerance) return Relation::indeterminate;
  return la < lb ? Relation::less : Relation::greater;
}

}  // namespace wreath
