#pragma once

// F_{2^n} as {0,1}^n through a basis, and the q-th residue character.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "immunity/gf.hpp"
#include "immunity/ring.hpp"

namespace imm {

struct BinaryFieldMap {
  Field field;
  /// Primitive element xi (order 2^n - 1).
  Elem generator = 0;
  /// phi(x) = sum_i x_i b_i.
  std::vector<Elem> basis;
  /// "poly" or "random:SEED".
  std::string basis_name;

  int n() const noexcept { return static_cast<int>(field.degree()); }
  Elem phi(Mask x) const noexcept;
};

/// First irreducible modulus of degree n over F_2, xi the first primitive
/// element, basis 1, xi, ..., xi^{n-1}. 2 <= n <= 16 (TooLarge otherwise).
BinaryFieldMap build_binary_field(int n);

/// Same field, basis changed by a random invertible F_2 matrix drawn from
/// mt19937_64(seed).
BinaryFieldMap with_random_basis(const BinaryFieldMap& map, std::uint64_t seed);

/// "poly" or "random:SEED"; throws ParseError.
BinaryFieldMap build_binary_field(int n, const std::string& basis_desc);

/// Lambda_q(phi(x)): 1 iff phi(x) is a q-th power. Zero counts as one
/// (0 = 0^q). Throws NotDivisor unless q | 2^n - 1.
BooleanFunction residue_character(const BinaryFieldMap& map, std::uint64_t q);

/// max popcount over the exponents; nullopt for an empty set.
std::optional<int> univariate_weight_degree(const std::vector<std::uint64_t>& exponents);

/// Largest d with C(n, <= d) <= 2^n / q; -1 if even d = 0 fails.
int residue_bound_degree(int n, std::uint64_t q);

struct ResidueReport {
  int n = 0;
  std::uint64_t q = 0;
  std::string basis;
  int bound_d = 0;
  int measured_immunity = 0;
  bool pass = false;
};

/// Immunity over F_2 of not Lambda_q under the map's basis, compared with
/// residue_bound_degree. n <= 12 (TooLarge).
ResidueReport verify_residue_immunity(const BinaryFieldMap& map, std::uint64_t q);

struct VandermondeRank {
  std::size_t rank = 0;
  std::size_t cols = 0;
};

/// Rank over F_{2^n} of the matrix with rows xi^{jq}, j < (2^n - 1)/q, and
/// columns x^i for exponents i < 2^n with popcount(i) <= d.
VandermondeRank residue_vandermonde_rank(const BinaryFieldMap& map, std::uint64_t q, int d);

}  // namespace imm
