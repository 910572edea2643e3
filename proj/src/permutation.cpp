#include "wreath/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

std::size_t CycleType::degree() const {
  std::size_t d = 0;
  for (auto [len, mult] : alpha) d += len * mult;
  return d;
}

std::size_t CycleType::cycles() const {
  std::size_t c = 0;
  for (auto [len, mult] : alpha) c += mult;
  return c;
}

std::size_t CycleType::multiplicity(std::size_t length) const {
  auto it = alpha.find(length);
  return it == alpha.end() ? 0 : it->second;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidArgument("image sequence is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point a = cyc[i];
      if (a >= degree) throw InvalidArgument("cycle point out of range");
      if (used[a]) throw InvalidArgument("cycles are not disjoint");
      used[a] = true;
      img[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::unchecked(std::vector<Point> images) noexcept {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<Point>(i);
  return q;
}

std::size_t Permutation::sigma() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

CycleType Permutation::cycle_type() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  CycleType ct;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ++ct.alpha[len];
  }
  return ct;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t f = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) f += images_[i] == i;
  return f;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("compose: degree mismatch");
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // (g x g^-1)(g(i)) = g(x(i))
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[g(static_cast<Point>(i))] = g(x(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(img));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& cyc : cycles) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i] + 1);
    }
    s += ')';
  }
  return s;
}

namespace {

struct CycleParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos + 1, msg); }

  std::vector<std::vector<Point>> parse() {
    std::vector<std::vector<Point>> cycles;
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') fail("expected '('");
      ++pos;
      std::vector<Point> cyc;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) fail("unterminated cycle");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point number");
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          if (v > 0xFFFFFFFFULL) throw ParseError(start + 1, "point number too large");
          ++pos;
        }
        if (v == 0) throw ParseError(start + 1, "points are 1-indexed");
        cyc.push_back(static_cast<Point>(v - 1));
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return cycles;
  }
};

}  // namespace

std::size_t max_point_in_cycles(std::string_view text) {
  CycleParser parser{text};
  std::size_t mx = 0;
  for (const auto& cyc : parser.parse())
    for (Point p : cyc) mx = std::max<std::size_t>(mx, p + 1);
  return mx;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  CycleParser parser{text};
  auto cycles = parser.parse();
  std::size_t mx = 0;
  for (const auto& cyc : cycles)
    for (Point p : cyc) mx = std::max<std::size_t>(mx, p + 1);
  if (degree == 0) degree = std::max<std::size_t>(mx, 1);
  if (mx > degree)
    throw InvalidArgument("point " + std::to_string(mx) + " exceeds degree " + std::to_string(degree));
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace wreath
