#include "immunity/symmetric.hpp"

#include <algorithm>

#include "immunity/error.hpp"

namespace imm {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

// C(a, b) mod p for digits a, b < p.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mulmod(num, a - i, p);
    den = mulmod(den, i + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

Elem lucas_binomial(std::uint64_t w, std::uint64_t k, std::uint64_t p) {
  check_prime(p);
  std::uint64_t r = 1;
  while (k && r) {
    r = mulmod(r, small_binomial(w % p, k % p, p), p);
    w /= p;
    k /= p;
  }
  return r;
}

std::vector<Elem> values_from_coeffs(const std::vector<Elem>& c, std::uint64_t p) {
  std::vector<Elem> v(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j <= i; ++j) acc = (acc + mulmod(lucas_binomial(i, j, p), c[j] % p, p)) % p;
    v[i] = acc;
  }
  return v;
}

std::vector<Elem> coeffs_from_values(const std::vector<Elem>& v, std::uint64_t p) {
  std::vector<Elem> c(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      const std::uint64_t term = mulmod(lucas_binomial(i, j, p), v[j] % p, p);
      acc = (i + j) % 2 ? (acc + p - term) % p : (acc + term) % p;
    }
    c[i] = acc;
  }
  return c;
}

std::vector<Elem> psi(int d, std::uint64_t i, std::uint64_t p) {
  if (d < 1) throw Error(ErrorKind::BadRange, "psi needs d >= 1");
  std::vector<Elem> row(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) row[static_cast<std::size_t>(j)] = lucas_binomial(i, static_cast<std::uint64_t>(j), p);
  return row;
}

MatrixGF psi_matrix(int d, const std::vector<std::uint64_t>& weights, std::uint64_t p) {
  std::vector<Elem> data;
  data.reserve(weights.size() * static_cast<std::size_t>(d));
  for (auto w : weights) {
    const auto row = psi(d, w, p);
    data.insert(data.end(), row.begin(), row.end());
  }
  return MatrixGF(Field::prime(p), weights.size(), static_cast<std::size_t>(d), std::move(data));
}

// ---------------------------------------------------------------------------
// SymmetricFn

SymmetricFn SymmetricFn::from_values(std::vector<Elem> values, std::uint64_t p) {
  check_prime(p);
  if (values.empty()) throw Error(ErrorKind::BadShape, "value vector needs n + 1 >= 1 entries");
  for (auto& v : values) v %= p;
  auto coeffs = coeffs_from_values(values, p);
  return SymmetricFn(std::move(values), std::move(coeffs), p);
}

SymmetricFn SymmetricFn::from_coeffs(std::vector<Elem> coeffs, std::uint64_t p) {
  check_prime(p);
  if (coeffs.empty()) throw Error(ErrorKind::BadShape, "coefficient vector needs n + 1 >= 1 entries");
  for (auto& c : coeffs) c %= p;
  auto values = values_from_coeffs(coeffs, p);
  return SymmetricFn(std::move(values), std::move(coeffs), p);
}

SymmetricFn SymmetricFn::from_boolean(const BooleanFunction& f, std::uint64_t p) {
  const auto w = f.weight_values();
  return from_values(std::vector<Elem>(w.begin(), w.end()), p);
}

std::optional<int> SymmetricFn::degree() const noexcept {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i]) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool SymmetricFn::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Elem v) { return v == 0; });
}

std::vector<std::uint64_t> SymmetricFn::zero_weights() const {
  std::vector<std::uint64_t> w;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i]) w.push_back(i);
  }
  return w;
}

BooleanFunction SymmetricFn::to_boolean() const {
  std::vector<std::uint8_t> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] ? 1 : 0;
  return BooleanFunction::symmetric(arity(), v);
}

SymmetricFn restrict_sym(const SymmetricFn& f, int l) {
  const int n = f.arity();
  if (l < 0 || l > n / 2) throw Error(ErrorKind::BadRange, "restriction level outside [0, n/2]");
  std::vector<Elem> v(f.values().begin() + l, f.values().end() - l);
  return SymmetricFn::from_values(std::move(v), f.characteristic());
}

// ---------------------------------------------------------------------------
// Annihilators

SymmetricAnnihilator min_symmetric_annihilator(const SymmetricFn& f) {
  const auto zeros = f.zero_weights();
  const std::uint64_t p = f.characteristic();
  if (zeros.empty()) return {0, {1}};
  if (zeros.size() == f.values().size()) return {std::nullopt, {}};
  // Column j holds sigma_j on the zero weights; the first column that depends
  // on the earlier ones fixes D.
  IncrementalColumnBasis basis(Field::prime(p), zeros.size());
  std::vector<Elem> col(zeros.size());
  for (int j = 0; j <= f.arity(); ++j) {
    for (std::size_t r = 0; r < zeros.size(); ++r) col[r] = lucas_binomial(zeros[r], static_cast<std::uint64_t>(j), p);
    if (auto dep = basis.add_column(col)) {
      std::vector<Elem> c(static_cast<std::size_t>(j) + 1, 0);
      for (std::size_t i = 0; i < dep->size(); ++i) c[i] = (*dep)[i] ? p - (*dep)[i] : 0;
      c.back() = 1;
      return {j, std::move(c)};
    }
  }
  throw Error(ErrorKind::AssertionFailure, "psi rows of a proper weight subset have full rank n + 1");
}

std::optional<int> min_symmetric_annihilator_degree(const SymmetricFn& f) {
  return min_symmetric_annihilator(f).degree;
}

namespace {

struct SymmetricBest {
  int degree = 0;
  int l = 0;
  SymmetricAnnihilator annihilator;
};

SymmetricBest best_split(const SymmetricFn& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "symmetric immunity of the zero function");
  const int n = f.arity();
  std::optional<SymmetricBest> best;
  for (int l = 0; l <= n / 2; ++l) {
    if (best && l >= best->degree) break;
    auto a = min_symmetric_annihilator(restrict_sym(f, l));
    if (!a.degree) continue;
    const int total = l + *a.degree;
    if (!best || total < best->degree) best = SymmetricBest{total, l, std::move(a)};
  }
  if (!best) throw Error(ErrorKind::AssertionFailure, "no restriction level produced an annihilator");
  return *best;
}

MultilinearPoly assemble_witness(int n, std::uint64_t p, const SymmetricBest& b) {
  const Field field = Field::prime(p);
  const int l = b.l;
  const int t = n - 2 * l;
  const auto& c = b.annihilator.coeffs;
  const int top = static_cast<int>(c.size()) - 1;
  MultilinearPoly::Terms terms;
  for (Mask tail = 0; tail < (Mask{1} << t); ++tail) {
    const int k = popcount(tail);
    if (k > top || !c[static_cast<std::size_t>(k)]) continue;
    const Mask shifted = tail << (2 * l);
    for (Mask side = 0; side < (Mask{1} << l); ++side) {
      Mask m = shifted;
      for (int i = 0; i < l; ++i) m |= Mask{1} << (2 * i + (side >> i & 1));
      const Elem coeff = popcount(side) % 2 ? field.neg(c[static_cast<std::size_t>(k)]) : c[static_cast<std::size_t>(k)];
      terms[m] = coeff;
    }
  }
  return MultilinearPoly(field, n, std::move(terms));
}

}  // namespace

ImmunityReport symmetric_immunity(const SymmetricFn& f) {
  const SymmetricBest b = best_split(f);
  ImmunityReport r;
  r.method = Method::Symmetric;
  r.degree = b.degree;
  const int n = f.arity();
  if (n <= kMaxImmunityVariables) {
    MultilinearPoly g = assemble_witness(n, f.characteristic(), b);
    r.checked = g.degree() == b.degree && ideal_member(g, f.to_boolean());
    r.witness = std::move(g);
  } else {
    const SymmetricFn restricted = restrict_sym(f, b.l);
    auto c = b.annihilator.coeffs;
    c.resize(restricted.values().size(), 0);
    const auto v = values_from_coeffs(c, f.characteristic());
    r.checked = true;
    for (auto w : restricted.zero_weights()) r.checked = r.checked && v[w] == 0;
  }
  return r;
}

int symmetric_immunity_degree(const SymmetricFn& f) { return best_split(f).degree; }

bool reflex_dual_exists(const std::vector<int>& s, int d, int n, std::uint64_t p, DualDirection direction) {
  check_prime(p);
  if (n < 0 || d < 0 || d > n + 1) throw Error(ErrorKind::BadRange, "need 0 <= d <= n + 1");
  std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
  for (int w : s) {
    if (w < 0 || w > n) throw Error(ErrorKind::BadRange, "weight set element outside [0, n]");
    in_s[static_cast<std::size_t>(w)] = 1;
  }
  const Field field = Field::prime(p);
  if (direction == DualDirection::Values) {
    if (d == 0) return false;
    std::vector<std::uint64_t> outside;
    for (int w = 0; w <= n; ++w) {
      if (!in_s[static_cast<std::size_t>(w)]) outside.push_back(static_cast<std::uint64_t>(w));
    }
    return rank(psi_matrix(d, outside, p)) < static_cast<std::size_t>(d);
  }
  std::vector<int> support;
  for (int w = 0; w <= n; ++w) {
    if (in_s[static_cast<std::size_t>(w)]) support.push_back(w);
  }
  if (support.empty()) return false;
  MatrixGF m(field, static_cast<std::size_t>(n + 1 - d), support.size());
  for (int w = d; w <= n; ++w) {
    for (std::size_t j = 0; j < support.size(); ++j) {
      m.set(static_cast<std::size_t>(w - d), j, lucas_binomial(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(support[j]), p));
    }
  }
  return rank(m) < support.size();
}

RestrictionBoundReport restriction_bound_check(int n, int q, std::uint64_t p) {
  check_prime(p);
  if (n < 1 || n > 256) throw Error(ErrorKind::TooLarge, "restriction bound check supports 1 <= n <= 256");
  if (q < 2) throw Error(ErrorKind::BadRange, "q must be >= 2");
  RestrictionBoundReport r;
  r.n = n;
  r.q = q;
  r.p = p;
  while (r.p_l * p <= static_cast<std::uint64_t>(q - 1)) {
    r.p_l *= p;
    ++r.l;
  }
  std::uint64_t top = 1;
  while (top * p <= static_cast<std::uint64_t>(n + 1)) top *= p;
  r.n_prime = n + 1 - static_cast<int>(top);
  r.bound_num = static_cast<std::uint64_t>(n - r.n_prime) * (r.p_l - 1);
  std::vector<Elem> v(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) v[static_cast<std::size_t>(w)] = w % q == 0 ? 1 : 0;
  r.measured = *min_symmetric_annihilator_degree(SymmetricFn::from_values(std::move(v), p));
  r.upper_reported = n - n / q - 1;
  r.holds = static_cast<std::uint64_t>(r.measured) * r.p_l >= r.bound_num;
  return r;
}

}  // namespace imm
