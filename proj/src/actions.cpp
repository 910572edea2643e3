#include "wreath/actions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

#include "wreath/combinatorics.hpp"
#include "wreath/errors.hpp"
#include "wreath/structure.hpp"

namespace wreath {

// ---------------------------------------------------------------- subsets

SubsetIndexer::SubsetIndexer(std::size_t m, std::size_t ell, const Budget& budget)
    : m_(m), ell_(ell) {
  if (ell > m) throw InvalidArgument("subset size exceeds m");
  const mpz_class total = binomial(m, ell);
  if (total > budget.max_lift_degree)
    throw BudgetExceeded("max_lift_degree", "C(" + std::to_string(m) + "," + std::to_string(ell) +
                                                ") exceeds " + std::to_string(budget.max_lift_degree));
  count_ = total.get_ui();
  complement_ = 2 * ell > m;
  key_size_ = complement_ ? m - ell : ell;

  const std::size_t cols = key_size_ + 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  binom_.assign((m + 1) * cols, 0);
  for (std::size_t a = 0; a <= m; ++a) {
    binom_[a * cols] = 1;
    for (std::size_t i = 1; i < cols && i <= a; ++i) {
      const auto x = binom_[(a - 1) * cols + i - 1];
      const auto y = binom_[(a - 1) * cols + i];
      binom_[a * cols + i] = (x > kMax - y) ? kMax : x + y;
    }
  }

  // colex enumeration of the key subsets
  keys_.reserve(count_ * key_size_);
  std::vector<Point> c(key_size_);
  for (std::size_t i = 0; i < key_size_; ++i) c[i] = static_cast<Point>(i);
  for (std::size_t r = 0; r < count_; ++r) {
    keys_.insert(keys_.end(), c.begin(), c.end());
    std::size_t i = 0;
    while (i < key_size_ && (i + 1 == key_size_ ? c[i] + 1 == m : c[i] + 1 == c[i + 1])) ++i;
    if (i == key_size_) break;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<Point>(j);
  }
}

std::size_t SubsetIndexer::key_rank(std::vector<Point>& key) const {
  std::sort(key.begin(), key.end());
  const std::size_t cols = key_size_ + 1;
  std::size_t r = 0;
  for (std::size_t i = 0; i < key.size(); ++i) r += binom_[key[i] * cols + i + 1];
  return r;
}

std::vector<Point> SubsetIndexer::subset(std::size_t rank) const {
  std::vector<Point> key(keys_.begin() + rank * key_size_, keys_.begin() + (rank + 1) * key_size_);
  if (!complement_) return key;
  std::vector<char> in(m_, 0);
  for (auto p : key) in[p] = 1;
  std::vector<Point> out;
  for (Point p = 0; p < m_; ++p)
    if (!in[p]) out.push_back(p);
  return out;
}

std::size_t SubsetIndexer::rank(std::span<const Point> members) const {
  if (members.size() != ell_) throw InvalidArgument("subset has the wrong size");
  std::vector<char> in(m_, 0);
  for (auto p : members) {
    if (p >= m_ || in[p]) throw InvalidArgument("subset members must be distinct points < m");
    in[p] = 1;
  }
  std::vector<Point> key;
  for (Point p = 0; p < m_; ++p)
    if (static_cast<bool>(in[p]) != complement_) key.push_back(p);
  return key_rank(key);
}

Permutation SubsetIndexer::lift(const Permutation& p) const {
  if (p.degree() != m_) throw DegreeMismatch("lift: permutation degree differs from m");
  std::vector<Point> img(count_);
  std::vector<Point> key(key_size_);
  for (std::size_t r = 0; r < count_; ++r) {
    for (std::size_t i = 0; i < key_size_; ++i) key[i] = p(keys_[r * key_size_ + i]);
    img[r] = static_cast<Point>(key_rank(key));
  }
  return Permutation::unchecked(std::move(img));
}

Permutation subsets_action_lift(const Permutation& p, std::size_t ell, const Budget& budget) {
  if (ell < 1 || ell >= p.degree()) throw InvalidArgument("lift needs 1 <= l < m");
  return SubsetIndexer(p.degree(), ell, budget).lift(p);
}

std::size_t sigma_prime(const Permutation& p, std::size_t ell, const Budget& budget) {
  return subsets_action_lift(p, ell, budget).sigma();
}

std::uint64_t fix_subsets_direct(const Permutation& p, std::size_t ell, const Budget& budget) {
  const std::size_t m = p.degree();
  if (ell < 1 || ell > m) throw InvalidArgument("fixed subsets need 1 <= l <= m");
  SubsetIndexer idx(m, ell, budget);
  std::uint64_t fixed = 0;
  std::vector<char> in(m, 0);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    auto s = idx.subset(r);
    for (auto q : s) in[q] = 1;
    bool stable = true;
    for (auto q : s) stable = stable && in[p(q)];
    for (auto q : s) in[q] = 0;
    fixed += stable;
  }
  return fixed;
}

Permutation product_action_build(std::span<const Permutation> coords, const Permutation& top,
                                 std::size_t m, std::size_t ell, const Budget& budget) {
  const std::size_t t = top.degree();
  if (coords.size() != t) throw DegreeMismatch("product action: need one coordinate per top point");
  if (ell < 1 || ell >= m) throw InvalidArgument("product action needs 1 <= l < m");
  SubsetIndexer idx(m, ell, budget);
  const std::size_t c = idx.size();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), c, t);
  if (total > budget.max_lift_degree)
    throw BudgetExceeded("max_lift_degree", "product action degree exceeds " +
                                                std::to_string(budget.max_lift_degree));
  const std::size_t n = total.get_ui();

  std::vector<Permutation> lifts;
  lifts.reserve(t);
  for (const auto& x : coords) lifts.push_back(idx.lift(x));
  const auto top_inv = top.inverse();

  std::vector<Point> img(n);
  std::vector<std::size_t> w(t);
  for (std::size_t point = 0; point < n; ++point) {
    std::size_t rest = point;
    for (std::size_t i = t; i-- > 0;) {
      w[i] = rest % c;
      rest /= c;
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t j = top_inv(static_cast<Point>(i));
      out = out * c + lifts[j](static_cast<Point>(w[j]));
    }
    img[point] = static_cast<Point>(out);
  }
  return Permutation::unchecked(std::move(img));
}

// ----------------------------------------------------------- wreath group

WreathGroup::WreathGroup(std::uint32_t k, PermGroup top_group)
    : k_(k), top_(std::move(top_group)) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  mpz_class base;
  mpz_ui_pow_ui(base.get_mpz_t(), k, top_.degree());
  if (base > mpz_class(std::numeric_limits<std::uint32_t>::max()) * 65536)
    throw BudgetExceeded("max_brute_order", "base group too large to index");
  base_size_ = base.get_ui();
  top_size_ = top_.elements().size();
}

WreathElement WreathGroup::element(std::uint64_t index) const {
  WreathElement x;
  x.top = static_cast<std::uint32_t>(index % top_size_);
  std::uint64_t code = index / top_size_;
  x.base.resize(degree());
  for (std::size_t i = degree(); i-- > 0;) {
    x.base[i] = static_cast<std::uint32_t>(code % k_);
    code /= k_;
  }
  return x;
}

std::uint64_t WreathGroup::index_of(const WreathElement& x) const {
  std::uint64_t code = 0;
  for (auto v : x.base) code = code * k_ + v;
  return code * top_size_ + x.top;
}

WreathElement WreathGroup::identity() const {
  return {std::vector<std::uint32_t>(degree(), 0), top_.identity_index()};
}

WreathElement WreathGroup::multiply(const WreathElement& a, const WreathElement& b) const {
  const auto& elems = top_.elements();
  const auto& h = elems[a.top];
  WreathElement out;
  out.base = a.base;
  for (Point j = 0; j < degree(); ++j) {
    auto& slot = out.base[h(j)];
    slot = (slot + b.base[j]) % k_;
  }
  out.top = *top_.index_of(compose(h, elems[b.top]));
  return out;
}

WreathElement WreathGroup::inverse(const WreathElement& a) const {
  const auto& h = top_.elements()[a.top];
  WreathElement out;
  out.base.resize(degree());
  for (Point j = 0; j < degree(); ++j) out.base[j] = (k_ - a.base[h(j)]) % k_;
  out.top = *top_.index_of(h.inverse());
  return out;
}

std::vector<WreathElement> WreathGroup::generators() const {
  std::vector<WreathElement> gens;
  if (k_ > 1) {
    for (std::size_t i = 0; i < degree(); ++i) {
      auto e = identity();
      e.base[i] = 1;
      gens.push_back(std::move(e));
    }
  }
  for (const auto& g : top_.generators()) {
    auto e = identity();
    e.top = *top_.index_of(g);
    gens.push_back(std::move(e));
  }
  return gens;
}

WreathGroup build_wreath_group(std::uint32_t k, const PermGroup& h, const Budget& budget) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), k, h.degree());
  size *= h.order();
  if (size > budget.max_brute_order)
    throw BudgetExceeded("max_brute_order", "k^n |H| exceeds " + std::to_string(budget.max_brute_order));
  return WreathGroup(k, h);
}

// --------------------------------------------------------------- families

namespace {

std::vector<std::string> split_params(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::optional<std::uint64_t> as_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Permutation cycle_perm(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Permutation::unchecked(std::move(img));
}

std::vector<Permutation> symmetric_gens(std::size_t n) {
  if (n <= 1) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  if (n == 2) return {Permutation::from_cycles(2, {{0, 1}})};
  return {Permutation::from_cycles(n, {{0, 1}}), cycle_perm(n)};
}

std::vector<Permutation> alternating_gens(std::size_t n) {
  if (n <= 2) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n == 3) return gens;
  std::vector<Point> big;
  for (Point i = (n % 2 == 1) ? 0 : 1; i < n; ++i) big.push_back(i);
  gens.push_back(Permutation::from_cycles(n, {big}));
  return gens;
}

mpz_class alt_order(std::size_t n) { return n <= 1 ? mpz_class(1) : mpz_class(factorial(n) / 2); }

// Left multiplication of Q8 on itself; element 2u+s is (-1)^s * unit[u],
// units ordered 1, i, j, k.
Permutation quaternion_left(std::size_t unit) {
  // product table unit[a] * unit[b] = sign * unit[c]
  static constexpr int prod[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Point> img(8);
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t s = 0; s < 2; ++s) {
      const int c = prod[unit][b][0];
      const int sign = (prod[unit][b][1] + static_cast<int>(s)) % 2;
      img[2 * b + s] = static_cast<Point>(2 * c + sign);
    }
  return Permutation(std::move(img));
}

void expect_params(const std::string& name, const std::vector<std::uint64_t>& p, std::size_t count) {
  if (p.size() != count)
    throw InvalidArgument("family '" + name + "' expects " + std::to_string(count) + " parameter(s)");
}

}  // namespace

PermGroup family(std::string_view spec_in, const Budget& budget) {
  const std::string spec = trim(spec_in);
  const auto colon = spec.find(':');
  const std::string name = trim(std::string_view(spec).substr(0, colon));
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  FamilyInfo info{name, {}, spec, std::nullopt};

  if (name == "gens") {
    auto pieces = split_params(rest);
    std::size_t degree = 0;
    std::size_t first = 0;
    if (!pieces.empty()) {
      if (auto d = as_uint(trim(pieces[0]))) {
        degree = *d;
        first = 1;
      }
    }
    if (first >= pieces.size()) throw InvalidArgument("gens: no generators given");
    if (degree == 0)
      for (std::size_t i = first; i < pieces.size(); ++i)
        degree = std::max(degree, max_point_in_cycles(pieces[i]));
    degree = std::max<std::size_t>(degree, 1);
    std::vector<Permutation> gens;
    for (std::size_t i = first; i < pieces.size(); ++i) gens.push_back(parse_cycles(pieces[i], degree));
    return PermGroup(std::move(gens), budget, info);
  }
  if (name == "quaternion") {
    if (!trim(rest).empty()) throw InvalidArgument("quaternion takes no parameters");
    info.order = 8;
    return PermGroup({quaternion_left(1), quaternion_left(2)}, budget, info);
  }

  if (!rest.empty()) {
    for (auto& piece : split_params(rest)) {
      auto v = as_uint(trim(piece));
      if (!v) throw InvalidArgument("family '" + name + "': bad parameter '" + trim(piece) + "'");
      info.params.push_back(*v);
    }
  }
  const auto& p = info.params;

  if (name == "trivial") {
    expect_params(name, p, 1);
    if (p[0] < 1) throw InvalidArgument("degree must be >= 1");
    info.order = 1;
    return PermGroup({Permutation::identity(p[0])}, budget, info);
  }
  if (name == "cyclic") {
    expect_params(name, p, 1);
    if (p[0] < 1) throw InvalidArgument("cyclic needs n >= 1");
    info.order = static_cast<unsigned long>(p[0]);
    return PermGroup({cycle_perm(p[0])}, budget, info);
  }
  if (name == "symmetric") {
    expect_params(name, p, 1);
    if (p[0] < 1) throw InvalidArgument("symmetric needs n >= 1");
    info.order = factorial(p[0]);
    return PermGroup(symmetric_gens(p[0]), budget, info);
  }
  if (name == "alternating") {
    expect_params(name, p, 1);
    if (p[0] < 1) throw InvalidArgument("alternating needs n >= 1");
    info.order = alt_order(p[0]);
    return PermGroup(alternating_gens(p[0]), budget, info);
  }
  if (name == "dihedral") {
    expect_params(name, p, 1);
    const std::size_t n = p[0];
    if (n < 3) throw InvalidArgument("dihedral needs n >= 3");
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
    info.order = static_cast<unsigned long>(2 * n);
    return PermGroup({cycle_perm(n), Permutation(std::move(refl))}, budget, info);
  }
  if (name == "subsets" || name == "subsets-alt") {
    expect_params(name, p, 2);
    const std::size_t m = p[0], ell = p[1];
    if (ell < 1 || ell >= m) throw InvalidArgument(name + " needs 1 <= l < m");
    SubsetIndexer idx(m, ell, budget);
    std::vector<Permutation> gens;
    for (const auto& g : name == "subsets" ? symmetric_gens(m) : alternating_gens(m))
      gens.push_back(idx.lift(g));
    info.order = name == "subsets" ? factorial(m) : alt_order(m);
    return PermGroup(std::move(gens), budget, info);
  }
  if (name == "product") {
    expect_params(name, p, 3);
    const std::size_t m = p[0], ell = p[1], t = p[2];
    if (ell < 1 || ell >= m || t < 1) throw InvalidArgument("product needs 1 <= l < m and t >= 1");
    std::vector<Permutation> gens;
    const auto id_m = Permutation::identity(m);
    const auto id_t = Permutation::identity(t);
    for (const auto& g : symmetric_gens(m)) {
      std::vector<Permutation> coords(t, id_m);
      coords[0] = g;
      gens.push_back(product_action_build(coords, id_t, m, ell, budget));
    }
    if (t > 1) {
      const std::vector<Permutation> coords(t, id_m);
      for (const auto& g : symmetric_gens(t)) gens.push_back(product_action_build(coords, g, m, ell, budget));
    }
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), factorial(m).get_mpz_t(), t);
    info.order = order * factorial(t);
    return PermGroup(std::move(gens), budget, info);
  }
  if (name == "wreath-cyclic") {
    expect_params(name, p, 1);
    const std::size_t m = p[0];
    if (m < 1) throw InvalidArgument("wreath-cyclic needs m >= 1");
    const std::size_t n = 2 * m;
    std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
    if (m > 1) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t b = 0; b < 2; ++b) img[2 * i + b] = static_cast<Point>(2 * ((i + 1) % m) + b);
      gens.push_back(Permutation(std::move(img)));
    }
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), 2, m);
    info.order = order * static_cast<unsigned long>(m);
    return PermGroup(std::move(gens), budget, info);
  }
  throw UnknownFamily("unknown group family '" + name + "'");
}

// ----------------------------------------------------------------- blocks

std::vector<std::vector<Point>> block_system(const PermGroup& h, std::span<const Point> block) {
  std::vector<Point> first(block.begin(), block.end());
  std::sort(first.begin(), first.end());
  std::set<std::vector<Point>> seen{first};
  std::deque<std::vector<Point>> queue{first};
  while (!queue.empty()) {
    auto b = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : h.generators()) {
      std::vector<Point> img;
      img.reserve(b.size());
      for (auto p : b) img.push_back(g(p));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  // std::set order on sorted vectors = order by smallest point for disjoint blocks
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::vector<Point>>> all_block_systems(const PermGroup& h) {
  std::vector<std::vector<std::vector<Point>>> out;
  auto blocks = blocks_containing_zero(h);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    if (it->size() > 1 && it->size() < h.degree()) out.push_back(block_system(h, *it));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::optional<BlockDecomposition> block_decomposition(const PermGroup& h) {
  if (!is_transitive(h)) throw InvalidArgument("block decomposition needs a transitive group");
  const std::size_t n = h.degree();
  auto blocks = blocks_containing_zero(h);
  const std::vector<Point>* chosen = nullptr;
  for (const auto& b : blocks) {
    if (b.size() <= 1 || b.size() >= n) continue;
    if (chosen == nullptr || b.size() > chosen->size()) chosen = &b;  // first of max size is lex-smallest
  }
  if (chosen == nullptr) return std::nullopt;

  BlockDecomposition d;
  d.blocks = block_system(h, *chosen);
  d.r = d.blocks.size();
  d.block_of.assign(n, 0);
  for (std::uint32_t b = 0; b < d.r; ++b)
    for (auto p : d.blocks[b]) d.block_of[p] = b;

  auto induced = [&](const Permutation& g) {
    std::vector<Point> img(d.r);
    for (std::size_t b = 0; b < d.r; ++b) img[b] = d.block_of[g(d.blocks[b].front())];
    return Permutation(std::move(img));
  };

  const auto& elems = h.elements();
  d.block_action.reserve(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    d.block_action.push_back(induced(elems[i]));
    if (d.block_action.back().is_identity()) d.kernel_indices.push_back(i);
  }
  d.kernel = subgroup(h, d.kernel_indices);
  std::vector<Permutation> qgens;
  for (const auto& g : h.generators()) qgens.push_back(induced(g));
  d.quotient = closure_elements(qgens, h.budget());
  return d;
}

}  // namespace wreath
