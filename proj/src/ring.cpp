#include "immunity/ring.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "immunity/error.hpp"

namespace imm {

namespace {

void check_arity(int n) {
  if (n < 0 || n > kMaxVariables) {
    throw Error(ErrorKind::TooLarge, "arity " + std::to_string(n) + " outside [0, " +
                                         std::to_string(kMaxVariables) + "]");
  }
}

void combinations(int n, int k, int start, Mask current, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int i = start; i <= n - k; ++i) combinations(n, k - 1, i + 1, current | (Mask{1} << i), out);
}

// Packs the bits of `m` that lie outside `fixed` into consecutive positions.
Mask compact(Mask m, Mask fixed, int n) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (fixed >> i & 1) continue;
    if (m >> i & 1) out |= Mask{1} << j;
    ++j;
  }
  return out;
}

void zeta(const Field& field, int n, std::vector<Elem>& v) {
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] = field.add(v[m], v[m ^ bit]);
    }
  }
}

void moebius(const Field& field, int n, std::vector<Elem>& v) {
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] = field.sub(v[m], v[m ^ bit]);
    }
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial_prefix(int n, int d) {
  std::uint64_t s = 0;
  for (int i = 0; i <= std::min(d, n); ++i) {
    const std::uint64_t b = binomial(n, i);
    if (s > std::numeric_limits<std::uint64_t>::max() - b) return std::numeric_limits<std::uint64_t>::max();
    s += b;
  }
  return s;
}

std::vector<Mask> monomials_of_degree(int n, int degree) {
  std::vector<Mask> out;
  if (degree < 0 || degree > n) return out;
  combinations(n, degree, 0, 0, out);
  return out;
}

std::vector<Mask> monomials_graded_lex(int n, int max_degree) {
  std::vector<Mask> out;
  for (int d = 0; d <= std::min(max_degree, n); ++d) {
    auto level = monomials_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool graded_lex_less(Mask a, Mask b) noexcept {
  const int da = popcount(a), db = popcount(b);
  if (da != db) return da < db;
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

// ---------------------------------------------------------------------------
// BooleanFunction

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  check_arity(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::BadShape, "truth table length " + std::to_string(table_.size()) +
                                         " != 2^" + std::to_string(n));
  }
  for (auto v : table_) {
    if (v > 1) throw Error(ErrorKind::BadShape, "truth table entries must be 0 or 1");
  }
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  check_arity(n);
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

BooleanFunction BooleanFunction::symmetric(int n, std::span<const std::uint8_t> values) {
  check_arity(n);
  if (values.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::BadShape, "symmetric value vector needs n + 1 entries");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) table[x] = values[popcount(x)];
  return BooleanFunction(n, std::move(table));
}

BooleanFunction BooleanFunction::complement() const {
  auto t = table_;
  for (auto& v : t) v ^= 1;
  return BooleanFunction(n_, std::move(t));
}

std::vector<Mask> BooleanFunction::zero_set() const {
  std::vector<Mask> out;
  for (Mask x = 0; x < table_.size(); ++x) {
    if (!table_[x]) out.push_back(x);
  }
  return out;
}

std::vector<Mask> BooleanFunction::one_set() const {
  std::vector<Mask> out;
  for (Mask x = 0; x < table_.size(); ++x) {
    if (table_[x]) out.push_back(x);
  }
  return out;
}

std::size_t BooleanFunction::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

bool BooleanFunction::is_zero() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](auto v) { return v == 0; });
}

bool BooleanFunction::is_one() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](auto v) { return v == 1; });
}

bool BooleanFunction::is_symmetric() const noexcept {
  std::vector<int> seen(n_ + 1, -1);
  for (Mask x = 0; x < table_.size(); ++x) {
    int& s = seen[popcount(x)];
    if (s < 0) {
      s = table_[x];
    } else if (s != table_[x]) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> BooleanFunction::weight_values() const {
  if (!is_symmetric()) throw Error(ErrorKind::BadShape, "function is not symmetric");
  std::vector<std::uint8_t> v(n_ + 1);
  for (int w = 0; w <= n_; ++w) v[w] = table_[(Mask{1} << w) - 1];
  return v;
}

BooleanFunction mod_indicator(int n, int q) {
  if (n < 1) throw Error(ErrorKind::BadRange, "n must be >= 1");
  if (q < 2) throw Error(ErrorKind::BadRange, "q must be >= 2");
  check_arity(n);
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) table[x] = popcount(x) % q == 0 ? 1 : 0;
  return BooleanFunction(n, std::move(table));
}

Assignment& Assignment::set(int var, bool value) {
  if (var < 0 || var >= kMaxVariables) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  fixed |= Mask{1} << var;
  if (value) {
    values |= Mask{1} << var;
  } else {
    values &= ~(Mask{1} << var);
  }
  return *this;
}

BooleanFunction restrict(const BooleanFunction& f, const Assignment& rho) {
  const int n = f.arity();
  if (n < kMaxVariables && (rho.fixed >> n) != 0) {
    throw Error(ErrorKind::ArityMismatch, "assignment touches variables beyond the arity");
  }
  const int free_vars = n - popcount(rho.fixed);
  std::vector<std::uint8_t> table(std::size_t{1} << free_vars);
  for (Mask y = 0; y < table.size(); ++y) {
    // Spread y over the free positions, then overlay the fixed values.
    Mask x = rho.values & rho.fixed;
    int j = 0;
    for (int i = 0; i < n; ++i) {
      if (rho.fixed >> i & 1) continue;
      if (y >> j & 1) x |= Mask{1} << i;
      ++j;
    }
    table[y] = f.table()[x];
  }
  return BooleanFunction(free_vars, std::move(table));
}

// ---------------------------------------------------------------------------
// MultilinearPoly

MultilinearPoly::MultilinearPoly(Field field, int n) : field_(std::move(field)), n_(n) { check_arity(n); }

MultilinearPoly::MultilinearPoly(Field field, int n, Terms terms) : field_(std::move(field)), n_(n) {
  check_arity(n);
  for (auto [m, c] : terms) {
    if (n < 32 && (m >> n) != 0) throw Error(ErrorKind::ArityMismatch, "monomial uses a variable beyond n");
    if (c >= field_.order()) throw Error(ErrorKind::BadRange, "coefficient is not a field element");
    if (c != 0) terms_.emplace(m, c);
  }
}

MultilinearPoly MultilinearPoly::constant(Field field, int n, Elem c) {
  MultilinearPoly p(std::move(field), n);
  p.add_term(0, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(Field field, int n, int var) {
  if (var < 0 || var >= n) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  MultilinearPoly p(std::move(field), n);
  p.add_term(Mask{1} << var, 1);
  return p;
}

MultilinearPoly MultilinearPoly::interpolate(Field field, int n, std::span<const Elem> values) {
  check_arity(n);
  if (values.size() != (std::size_t{1} << n)) throw Error(ErrorKind::ArityMismatch, "value vector length != 2^n");
  std::vector<Elem> v(values.begin(), values.end());
  moebius(field, n, v);
  MultilinearPoly p(std::move(field), n);
  for (Mask m = 0; m < v.size(); ++m) {
    if (v[m]) p.terms_.emplace_hint(p.terms_.end(), m, v[m]);
  }
  return p;
}

MultilinearPoly MultilinearPoly::indicator(Field field, const BooleanFunction& f) {
  std::vector<Elem> v(f.table().begin(), f.table().end());
  return interpolate(std::move(field), f.arity(), v);
}

std::optional<int> MultilinearPoly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, popcount(m));
  return d;
}

Elem MultilinearPoly::coefficient(Mask monomial) const noexcept {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<Mask> MultilinearPoly::leading_monomial() const noexcept {
  std::optional<Mask> best;
  for (const auto& [m, c] : terms_) {
    if (!best || graded_lex_less(*best, m)) best = m;
  }
  return best;
}

Elem MultilinearPoly::evaluate(Mask point) const noexcept {
  Elem s = 0;
  for (const auto& [m, c] : terms_) {
    if ((m & point) == m) s = field_.add(s, c);
  }
  return s;
}

Elem MultilinearPoly::evaluate(std::span<const std::uint8_t> point) const {
  if (point.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                              std::to_string(n_));
  }
  Mask x = 0;
  for (int i = 0; i < n_; ++i) {
    if (point[i] > 1) throw Error(ErrorKind::BadShape, "point coordinates must be 0 or 1");
    if (point[i]) x |= Mask{1} << i;
  }
  return evaluate(x);
}

std::vector<Elem> MultilinearPoly::values() const {
  std::vector<Elem> v(std::size_t{1} << n_, 0);
  for (const auto& [m, c] : terms_) v[m] = c;
  zeta(field_, n_, v);
  return v;
}

void MultilinearPoly::check_compatible(const MultilinearPoly& other) const {
  if (n_ != other.n_) throw Error(ErrorKind::ArityMismatch, "polynomials have different arity");
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials live in different fields");
}

void MultilinearPoly::add_term(Mask m, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
  check_compatible(other);
  MultilinearPoly r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

MultilinearPoly MultilinearPoly::operator-() const {
  MultilinearPoly r(field_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.neg(c));
  return r;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& other) const { return *this + (-other); }

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  check_compatible(other);
  const std::uint64_t pairs = static_cast<std::uint64_t>(terms_.size()) * other.terms_.size();
  const std::uint64_t dense_cost = (static_cast<std::uint64_t>(n_) + 1) << n_;
  if (pairs <= dense_cost) {
    MultilinearPoly r(field_, n_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : other.terms_) r.add_term(ma | mb, field_.mul(ca, cb));
    }
    return r;
  }
  auto va = values();
  const auto vb = other.values();
  for (std::size_t i = 0; i < va.size(); ++i) va[i] = field_.mul(va[i], vb[i]);
  return interpolate(field_, n_, va);
}

MultilinearPoly MultilinearPoly::scaled(Elem c) const {
  MultilinearPoly r(field_, n_);
  for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
  return r;
}

MultilinearPoly MultilinearPoly::restrict(const Assignment& rho) const {
  if (n_ < 32 && (rho.fixed >> n_) != 0) {
    throw Error(ErrorKind::ArityMismatch, "assignment touches variables beyond the arity");
  }
  const Mask zeros = rho.fixed & ~rho.values;
  MultilinearPoly r(field_, n_ - popcount(rho.fixed));
  for (const auto& [m, c] : terms_) {
    if (m & zeros) continue;
    r.add_term(compact(m, rho.fixed, n_), c);
  }
  return r;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mask, Elem>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = popcount(a.first), db = popcount(b.first);
    if (da != db) return da > db;
    return graded_lex_less(a.first, b.first);
  });
  std::string out;
  const std::uint64_t p = field_.characteristic();
  for (const auto& [m, c] : sorted) {
    bool negative = false;
    std::string coeff;
    if (field_.is_prime_field()) {
      Elem magnitude = c;
      if (p > 2 && c > p / 2) {
        negative = true;
        magnitude = p - c;
      }
      if (magnitude != 1 || m == 0) coeff = std::to_string(magnitude);
    } else if (c != 1 || m == 0) {
      coeff = "(" + field_.format(c) + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    for (int i = 0; i < n_; ++i) {
      if (m >> i & 1) out += "x" + std::to_string(i + 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// y-coordinates

namespace {

Elem y_shift(const Field& field, Elem omega, bool inverse) {
  if (omega >= field.order()) throw Error(ErrorKind::BadRange, "omega is not a field element");
  if (omega == 0 || omega == 1) throw Error(ErrorKind::NotRootOfUnity, "omega must be a unit other than 1");
  const Elem w = inverse ? field.inv(omega) : omega;
  return field.sub(w, field.one());
}

}  // namespace

MultilinearPoly y_transform(const MultilinearPoly& x_poly, Elem omega, bool inverse) {
  const Field& field = x_poly.field();
  // x_i = (y_i - 1) / beta.
  const Elem beta_inv = field.inv(y_shift(field, omega, inverse));
  MultilinearPoly::Terms acc;
  for (const auto& [s, c] : x_poly.terms()) {
    const Elem a = field.mul(c, field.pow(beta_inv, static_cast<std::uint64_t>(popcount(s))));
    for (Mask t = s;; t = (t - 1) & s) {
      const Elem term = (popcount(s ^ t) & 1) ? field.neg(a) : a;
      Elem& slot = acc[t];
      slot = field.add(slot, term);
      if (t == 0) break;
    }
  }
  return MultilinearPoly(field, x_poly.arity(), std::move(acc));
}

MultilinearPoly from_y_representation(const MultilinearPoly& y_poly, Elem omega, bool inverse) {
  const Field& field = y_poly.field();
  // y_i = 1 + beta x_i.
  const Elem beta = y_shift(field, omega, inverse);
  MultilinearPoly::Terms acc;
  for (const auto& [t, c] : y_poly.terms()) {
    for (Mask s = t;; s = (s - 1) & t) {
      Elem& slot = acc[s];
      slot = field.add(slot, field.mul(c, field.pow(beta, static_cast<std::uint64_t>(popcount(s)))));
      if (s == 0) break;
    }
  }
  return MultilinearPoly(field, y_poly.arity(), std::move(acc));
}

bool ideal_member(const MultilinearPoly& g, const BooleanFunction& f) {
  if (g.arity() != f.arity()) throw Error(ErrorKind::ArityMismatch, "polynomial and function arity differ");
  if (g.is_zero()) return true;
  const auto v = g.values();
  for (Mask x = 0; x < v.size(); ++x) {
    if (!f(x) && v[x] != 0) return false;
  }
  return true;
}

MultilinearPoly tightness_witness(int n, int q, std::uint64_t p) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::BadShape, "tightness witness needs even n >= 2");
  if (q < 1 || (n / 2) % q != 0) throw Error(ErrorKind::BadShape, "tightness witness needs n/2 divisible by q");
  check_arity(n);
  const Field field = Field::prime(p);
  MultilinearPoly g = MultilinearPoly::constant(field, n, 1);
  for (int i = 0; i < n / 2; ++i) {
    g = g * (MultilinearPoly::variable(field, n, 2 * i) - MultilinearPoly::variable(field, n, 2 * i + 1));
  }
  return g;
}

MultilinearPoly not_mod_upper_witness(int n, int q, std::uint64_t p) {
  if (n < 2) throw Error(ErrorKind::BadShape, "upper witness needs n >= 2");
  check_arity(n);
  const RootOfUnity root = find_root_of_unity(p, static_cast<std::uint64_t>(q));
  const Field& field = root.field;
  const int half = (n + 1) / 2;
  const Mask head = (Mask{1} << half) - 1;
  const Mask tail = ((Mask{1} << n) - 1) & ~head;
  const Elem beta = y_shift(field, root.omega, false);
  const Elem beta_inv = y_shift(field, root.omega, true);
  MultilinearPoly::Terms acc;
  // prod_{i in H} (1 + beta x_i) = sum_{S subset H} beta^{|S|} x^S.
  for (Mask s = head;; s = (s - 1) & head) {
    Elem& slot = acc[s];
    slot = field.add(slot, field.pow(beta, static_cast<std::uint64_t>(popcount(s))));
    if (s == 0) break;
  }
  for (Mask s = tail;; s = (s - 1) & tail) {
    Elem& slot = acc[s];
    slot = field.sub(slot, field.pow(beta_inv, static_cast<std::uint64_t>(popcount(s))));
    if (s == 0) break;
  }
  return MultilinearPoly(field, n, std::move(acc));
}

// ---------------------------------------------------------------------------
// Truth-table files

TruthTableFile read_truth_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorKind::ParseError, "missing header line \"n p\"");
  std::istringstream hs(header);
  long long n = -1, p = -1;
  std::string extra;
  if (!(hs >> n >> p) || (hs >> extra)) throw Error(ErrorKind::ParseError, "header must be \"n p\"");
  if (n < 0 || n > kMaxVariables) throw Error(ErrorKind::ParseError, "n out of range");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::ParseError, "p must be prime");
  std::string body, line;
  while (std::getline(in, line)) {
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        body.push_back(ch);
      } else if (ch != ' ' && ch != '\t' && ch != '\r') {
        throw Error(ErrorKind::ParseError, std::string("unexpected character '") + ch + "' in table");
      }
    }
  }
  const std::size_t expected = std::size_t{1} << n;
  if (body.size() != expected) {
    throw Error(ErrorKind::ParseError, "table has " + std::to_string(body.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
  std::vector<std::uint8_t> table(expected);
  for (std::size_t i = 0; i < expected; ++i) table[i] = body[i] == '1';
  return TruthTableFile{BooleanFunction(static_cast<int>(n), std::move(table)), static_cast<std::uint64_t>(p)};
}

void write_truth_table(std::ostream& out, const BooleanFunction& f, std::uint64_t p) {
  out << f.arity() << ' ' << p << '\n';
  for (auto v : f.table()) out << (v ? '1' : '0');
  out << '\n';
}

}  // namespace imm
