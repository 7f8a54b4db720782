#pragma once

// Prime fields F_p and extension fields F_{p^k} in polynomial basis.
//
// An element of F_{p^k} = F_p[z]/(m(z)) is the coefficient sequence
// (c_0, ..., c_{k-1}) of its reduced representative, packed into one integer
// as c_0 + c_1 p + ... + c_{k-1} p^{k-1}. For k = 1 this is the usual residue
// in [0, p). The packed order is also the lexicographic order used for every
// deterministic search below (moduli, primitive elements).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace imm {

using Elem = std::uint64_t;

class Field {
 public:
  /// F_p; throws NotPrime for composite p and BadRange for p < 2.
  static Field prime(std::uint64_t p);

  /// F_p[z]/(modulus). `modulus` is monic, low coefficient first, degree k >= 1.
  /// Throws NotIrreducible if the modulus factors over F_p.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  /// Number of elements p^k.
  std::uint64_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// Image of an integer under Z -> F_p -> F_{p^k}.
  Elem from_int(std::int64_t v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Throws ZeroElement for a == 0.
  Elem inv(Elem a) const;

  std::vector<std::uint64_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint64_t> coeffs) const;

  /// "F_5" or "F_2[z]/(z^2 + z + 1)".
  std::string describe() const;
  /// Human-readable element, e.g. "3" in F_p or "z + 1" in an extension.
  std::string format(Elem a) const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint64_t p, std::vector<std::uint64_t> modulus);
  Elem ext_mul(Elem a, Elem b) const noexcept;

  std::uint64_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t order_ = 2;
  std::vector<std::uint64_t> modulus_;
};

/// Same as Field::prime.
inline Field make_prime_field(std::uint64_t p) { return Field::prime(p); }

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime factors in increasing order (n >= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Irreducibility of a monic polynomial over F_p (low coefficient first),
/// decided by the Ben-Or gcd test gcd(z^{p^i} - z, m) = 1 for i <= k/2.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic);

/// First monic irreducible polynomial of degree k over F_p in packed
/// (graded-lex) order of its lower coefficients.
std::vector<std::uint64_t> first_irreducible(std::uint64_t p, unsigned k);

/// Smallest t >= 1 with a^t = 1. Throws ZeroElement for a == 0.
std::uint64_t element_order(const Field& field, Elem a);

/// Lexicographically first element of order p^k - 1.
Elem first_primitive_element(const Field& field);

struct RootOfUnity {
  Field field;
  Elem omega;
  Elem generator;
  std::uint64_t q;
};

inline constexpr unsigned kDefaultExtensionCap = 16;

/// Smallest extension F_{p^k} with q | p^k - 1, its graded-lex-first modulus,
/// and omega = g^{(p^k-1)/q} for the first primitive element g.
/// Throws NotCoprime if gcd(p, q) != 1, SearchLimit if k > max_degree.
RootOfUnity find_root_of_unity(std::uint64_t p, std::uint64_t q,
                               unsigned max_degree = kDefaultExtensionCap);

}  // namespace imm
