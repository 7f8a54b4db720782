#include "immunity/gf.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "immunity/error.hpp"

namespace imm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::SearchLimit: return "SearchLimit";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr unsigned kMaxDigits = 64;

// Dense polynomials over F_p, low coefficient first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^{p-2}.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > kMaxOrder / p) return 0;
    r *= p;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic) {
  Poly m(monic.begin(), monic.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  if (m[0] == 0) return false;  // z divides m
  const Poly z{0, 1};
  Poly h = z;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, m, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const Poly g = poly_gcd(m, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_irreducible(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::BadRange, "extension degree must be >= 1");
  const std::uint64_t count = checked_power(p, k);
  if (count == 0) throw Error(ErrorKind::SearchLimit, "p^k exceeds the supported field size");
  std::vector<std::uint64_t> m(k + 1, 0);
  m[k] = 1;
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    std::uint64_t rest = lower;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = rest % p;
      rest /= p;
    }
    if (is_irreducible(p, m)) return m;
  }
  throw Error(ErrorKind::SearchLimit, "no irreducible polynomial found");
}

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  order_ = checked_power(p_, k_);
}

Field Field::prime(std::uint64_t p) {
  if (p < 2) throw Error(ErrorKind::BadRange, "field characteristic must be >= 2");
  if (p >= kMaxCharacteristic) throw Error(ErrorKind::TooLarge, "characteristic above 2^31");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Field(p, {0, 1});
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  Field base = prime(p);
  (void)base;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorKind::BadShape, "modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorKind::BadShape, "modulus coefficient out of range");
  }
  if (modulus.size() - 1 > kMaxDigits || checked_power(p, static_cast<unsigned>(modulus.size() - 1)) == 0) {
    throw Error(ErrorKind::SearchLimit, "p^k exceeds the supported field size");
  }
  if (!is_irreducible(p, modulus)) {
    throw Error(ErrorKind::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
  }
  // Degree-1 moduli are all equivalent to F_p itself; normalise to z so that
  // residues are the element representation.
  if (modulus.size() == 2) modulus = {0, 1};
  return Field(p, std::move(modulus));
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (k_ == 1) return a * b % p_;
  return ext_mul(a, b);
}

Elem Field::ext_mul(Elem a, Elem b) const noexcept {
  if (p_ == 2) {
    // Carry-less multiply then reduce by the modulus bit pattern.
    Elem mod_bits = 0;
    for (unsigned i = 0; i <= k_; ++i) mod_bits |= Elem(modulus_[i]) << i;
    Elem result = 0;
    while (b) {
      if (b & 1) result ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> k_) & 1) a ^= mod_bits;
    }
    return result;
  }
  std::array<std::uint64_t, kMaxDigits> da{}, db{};
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t c = prod[i];
    if (c) {
      prod[i] = 0;
      for (unsigned j = 0; j < k_; ++j) {
        prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
      }
    }
  }
  Elem out = 0;
  for (unsigned i = k_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  if (k_ == 1) return inv_mod(a, p_);
  return pow(a, order_ - 2);
}

std::vector<std::uint64_t> Field::coefficients(Elem a) const {
  std::vector<std::uint64_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > k_) throw Error(ErrorKind::BadShape, "too many coefficients for field degree");
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) out = out * p_ + coeffs[i] % p_;
  return out;
}

namespace {

std::string format_poly(const std::vector<std::uint64_t>& c, const char* var) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string Field::describe() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "[z]/(" + format_poly(modulus_, "z") + ")";
}

std::string Field::format(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  return format_poly(coefficients(a), "z");
}

std::uint64_t element_order(const Field& field, Elem a) {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "order of zero is undefined");
  const std::uint64_t group = field.order() - 1;
  std::uint64_t t = group;
  for (auto r : prime_factors(group)) {
    while (t % r == 0 && field.pow(a, t / r) == field.one()) t /= r;
  }
  return t;
}

Elem first_primitive_element(const Field& field) {
  const std::uint64_t group = field.order() - 1;
  const auto factors = prime_factors(group);
  for (Elem a = 1; a < field.order(); ++a) {
    bool primitive = true;
    for (auto r : factors) {
      if (field.pow(a, group / r) == field.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  throw Error(ErrorKind::SearchLimit, "no primitive element");
}

RootOfUnity find_root_of_unity(std::uint64_t p, std::uint64_t q, unsigned max_degree) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (q < 2) throw Error(ErrorKind::BadRange, "root-of-unity order must be >= 2");
  if (gcd(p, q) != 1) {
    throw Error(ErrorKind::NotCoprime, "p=" + std::to_string(p) + " divides q=" + std::to_string(q));
  }
  unsigned k = 1;
  std::uint64_t r = p % q;
  while (r != 1 % q) {
    r = r * (p % q) % q;
    ++k;
    if (k > max_degree) break;
  }
  if (k > max_degree) {
    throw Error(ErrorKind::SearchLimit, "extension degree for q=" + std::to_string(q) +
                                            " exceeds cap " + std::to_string(max_degree));
  }
  if (checked_power(p, k) == 0) throw Error(ErrorKind::SearchLimit, "p^k exceeds the supported field size");
  Field field = Field::extension(p, first_irreducible(p, k));
  const Elem g = first_primitive_element(field);
  const Elem omega = field.pow(g, (field.order() - 1) / q);
  return RootOfUnity{std::move(field), omega, g, q};
}

}  // namespace imm
