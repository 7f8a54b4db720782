#include "immunity/residue.hpp"

#include <random>

#include "immunity/error.hpp"
#include "immunity/immunity.hpp"
#include "immunity/linalg.hpp"

namespace imm {

Elem BinaryFieldMap::phi(Mask x) const noexcept {
  Elem e = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x >> i & 1) e ^= basis[i];
  }
  return e;
}

BinaryFieldMap build_binary_field(int n) {
  if (n < 2 || n > 16) throw Error(ErrorKind::TooLarge, "binary field degree must lie in [2, 16]");
  Field field = Field::extension(2, first_irreducible(2, static_cast<unsigned>(n)));
  const Elem xi = first_primitive_element(field);
  std::vector<Elem> basis;
  Elem power = 1;
  for (int i = 0; i < n; ++i) {
    basis.push_back(power);
    power = field.mul(power, xi);
  }
  return {std::move(field), xi, std::move(basis), "poly"};
}

BinaryFieldMap with_random_basis(const BinaryFieldMap& map, std::uint64_t seed) {
  const int n = map.n();
  std::mt19937_64 rng(seed);
  const Field f2 = Field::prime(2);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (;;) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    MatrixGF a(f2, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)] = rng() & mask;
      for (int j = 0; j < n; ++j) a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), rows[static_cast<std::size_t>(i)] >> j & 1);
    }
    if (rank(a) != static_cast<std::size_t>(n)) continue;
    BinaryFieldMap out = map;
    for (int i = 0; i < n; ++i) out.basis[static_cast<std::size_t>(i)] = map.phi(static_cast<Mask>(rows[static_cast<std::size_t>(i)]));
    out.basis_name = "random:" + std::to_string(seed);
    return out;
  }
}

BinaryFieldMap build_binary_field(int n, const std::string& basis_desc) {
  BinaryFieldMap map = build_binary_field(n);
  if (basis_desc == "poly") return map;
  const std::string prefix = "random:";
  if (basis_desc.rfind(prefix, 0) == 0 && basis_desc.size() > prefix.size()) {
    const std::string digits = basis_desc.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 19) {
      return with_random_basis(map, std::stoull(digits));
    }
  }
  throw Error(ErrorKind::ParseError, "basis must be \"poly\" or \"random:SEED\"");
}

BooleanFunction residue_character(const BinaryFieldMap& map, std::uint64_t q) {
  const std::uint64_t group = map.field.order() - 1;
  if (q == 0 || group % q != 0) throw Error(ErrorKind::NotDivisor, "q must divide 2^n - 1");
  std::vector<std::uint8_t> is_power(map.field.order(), 0);
  is_power[0] = 1;
  const Elem step = map.field.pow(map.generator, q);
  Elem y = 1;
  for (std::uint64_t j = 0; j < group / q; ++j) {
    is_power[y] = 1;
    y = map.field.mul(y, step);
  }
  const int n = map.n();
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) table[x] = is_power[map.phi(x)];
  return BooleanFunction(n, std::move(table));
}

std::optional<int> univariate_weight_degree(const std::vector<std::uint64_t>& exponents) {
  std::optional<int> d;
  for (auto e : exponents) d = std::max(d.value_or(0), __builtin_popcountll(e));
  return d;
}

int residue_bound_degree(int n, std::uint64_t q) {
  int d = -1;
  while (d < n && binomial_prefix(n, d + 1) * q <= (std::uint64_t{1} << n)) ++d;
  return d;
}

ResidueReport verify_residue_immunity(const BinaryFieldMap& map, std::uint64_t q) {
  const int n = map.n();
  if (n > 12) throw Error(ErrorKind::TooLarge, "residue verification supports n <= 12");
  const BooleanFunction lambda = residue_character(map, q);
  ResidueReport r;
  r.n = n;
  r.q = q;
  r.basis = map.basis_name;
  r.bound_d = residue_bound_degree(n, q);
  r.measured_immunity = *immunity_degree(lambda.complement(), 2);
  r.pass = r.measured_immunity > r.bound_d;
  return r;
}

VandermondeRank residue_vandermonde_rank(const BinaryFieldMap& map, std::uint64_t q, int d) {
  const Field& field = map.field;
  const std::uint64_t group = field.order() - 1;
  if (q == 0 || group % q != 0) throw Error(ErrorKind::NotDivisor, "q must divide 2^n - 1");
  std::vector<std::uint64_t> exps;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    if (__builtin_popcountll(i) <= d) exps.push_back(i);
  }
  const std::uint64_t t = group / q;
  MatrixGF a(field, t, exps.size());
  const Elem step = field.pow(map.generator, q);
  Elem y = 1;
  for (std::uint64_t j = 0; j < t; ++j) {
    for (std::size_t c = 0; c < exps.size(); ++c) a.set(j, c, field.pow(y, exps[c]));
    y = field.mul(y, step);
  }
  return {rank(a), exps.size()};
}

}  // namespace imm
