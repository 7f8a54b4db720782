#pragma once

// Symmetric functions: value vectors v(0..n), coefficient vectors in the
// elementary symmetric basis sigma_0..sigma_n, psi_d rows, and the
// symmetrised immunity computation.

#include <cstdint>
#include <optional>
#include <vector>

#include "immunity/gf.hpp"
#include "immunity/immunity.hpp"
#include "immunity/linalg.hpp"
#include "immunity/ring.hpp"

namespace imm {

/// C(w, k) mod p by Lucas: product of base-p digit binomials.
Elem lucas_binomial(std::uint64_t w, std::uint64_t k, std::uint64_t p);

/// v(i) = sum_{j <= i} C(i, j) c(j) mod p.
std::vector<Elem> values_from_coeffs(const std::vector<Elem>& c, std::uint64_t p);
/// c(i) = sum_{j <= i} (-1)^{i+j} C(i, j) v(j) mod p.
std::vector<Elem> coeffs_from_values(const std::vector<Elem>& v, std::uint64_t p);

/// (C(i,0), ..., C(i,d-1)) mod p; d >= 1.
std::vector<Elem> psi(int d, std::uint64_t i, std::uint64_t p);

/// Rows psi_d(w) for the given weights.
MatrixGF psi_matrix(int d, const std::vector<std::uint64_t>& weights, std::uint64_t p);

class SymmetricFn {
 public:
  /// Values are reduced mod p.
  static SymmetricFn from_values(std::vector<Elem> values, std::uint64_t p);
  static SymmetricFn from_coeffs(std::vector<Elem> coeffs, std::uint64_t p);
  /// Throws BadShape if f is not symmetric.
  static SymmetricFn from_boolean(const BooleanFunction& f, std::uint64_t p);

  int arity() const noexcept { return static_cast<int>(values_.size()) - 1; }
  std::uint64_t characteristic() const noexcept { return p_; }
  const std::vector<Elem>& values() const noexcept { return values_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  /// max{i : c(i) != 0}; nullopt for zero.
  std::optional<int> degree() const noexcept;
  bool is_zero() const noexcept;
  /// Weights w with v(w) = 0.
  std::vector<std::uint64_t> zero_weights() const;
  /// Truth table with f(x) = [v(|x|) != 0].
  BooleanFunction to_boolean() const;

 private:
  SymmetricFn(std::vector<Elem> values, std::vector<Elem> coeffs, std::uint64_t p)
      : p_(p), values_(std::move(values)), coeffs_(std::move(coeffs)) {}

  std::uint64_t p_;
  std::vector<Elem> values_;
  std::vector<Elem> coeffs_;
};

/// Middle slice v(l..n-l) on n - 2l variables. Throws BadRange.
SymmetricFn restrict_sym(const SymmetricFn& f, int l);

struct SymmetricAnnihilator {
  /// nullopt when f is identically zero.
  std::optional<int> degree;
  /// c(0..degree): sum_j c(j) sigma_j vanishes on every zero weight of f.
  std::vector<Elem> coeffs;
};

/// Smallest D such that the rows {psi_{D+1}(w) : v(w) = 0} have rank <= D.
SymmetricAnnihilator min_symmetric_annihilator(const SymmetricFn& f);
std::optional<int> min_symmetric_annihilator_degree(const SymmetricFn& f);

/// min over l of l + min_symmetric_annihilator_degree(restrict_sym(f, l)).
/// The witness (n <= 20 only) is
///   (sum_j c_j sigma_j(x_{2l+1}, ..., x_n)) * prod_{i=1}^{l} (x_{2i-1} - x_{2i}).
/// For larger n the annihilator is re-checked on weights instead.
/// Throws ZeroFunction.
ImmunityReport symmetric_immunity(const SymmetricFn& f);
/// Degree only, any n.
int symmetric_immunity_degree(const SymmetricFn& f);

enum class DualDirection {
  /// Nonzero symmetric function of degree < d with value support in S.
  Values,
  /// Nonzero symmetric function with coefficient support in S, vanishing on
  /// every weight >= d.
  Coeffs,
};

/// S subset of {0..n}, 0 <= d <= n + 1 (BadRange otherwise).
bool reflex_dual_exists(const std::vector<int>& s, int d, int n, std::uint64_t p, DualDirection direction);

struct RestrictionBoundReport {
  int n = 0;
  int q = 0;
  std::uint64_t p = 0;
  int l = 0;              // floor(log_p(q - 1)); 0 when q = 2
  int n_prime = 0;        // n + 1 - p^{floor(log_p(n + 1))}
  std::uint64_t p_l = 1;  // p^l
  /// Bound (n - n')(1 - p^{-l}) as the fraction bound_num / p^l.
  std::uint64_t bound_num = 0;
  int measured = 0;       // least degree of a nonzero symmetric element of <chi_q>
  int upper_reported = 0; // n - floor(n/q) - 1, informational
  bool holds = false;     // measured >= bound
};

/// Measures the least degree of a nonzero symmetric element of <chi_q> over
/// F_p and compares it with (n - n')(1 - p^{-l}). n <= 256 (TooLarge).
RestrictionBoundReport restriction_bound_check(int n, int q, std::uint64_t p);

}  // namespace imm
