#pragma once

// The ring F[x_1..x_n]/(x_i^2 = x_i) and Boolean functions on {0,1}^n.
//
// Points and monomials are both n-bit masks: bit i (0-based) of a point is
// x_{i+1}, and a monomial mask lists the variables in the product. The value
// of monomial S at point x is 1 iff S is a subset of x.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "immunity/gf.hpp"

namespace imm {

using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 24;

inline int popcount(Mask m) noexcept { return __builtin_popcount(m); }

/// sum_{i <= d} C(n, i), saturating at SIZE_MAX.
std::uint64_t binomial_prefix(int n, int d);
std::uint64_t binomial(int n, int k);

/// Monomials of degree <= max_degree, ordered by degree and then
/// lexicographically by their sorted variable indices
/// (x1x2 < x1x3 < x1x4 < x2x3 ...). This is the column order of every
/// monomial-evaluation matrix in the library.
std::vector<Mask> monomials_graded_lex(int n, int max_degree);
/// Monomials of degree exactly `degree`, in the same order.
std::vector<Mask> monomials_of_degree(int n, int degree);

/// true iff a < b in the graded-lex order above.
bool graded_lex_less(Mask a, Mask b) noexcept;

class BooleanFunction {
 public:
  /// `table[x]` is f(x); length must be 2^n and entries 0/1.
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  static BooleanFunction constant(int n, bool value);
  /// f(x) = values[|x|]; values has n + 1 entries in {0, 1}.
  static BooleanFunction symmetric(int n, std::span<const std::uint8_t> values);

  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(Mask x) const noexcept { return table_[x] != 0; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  BooleanFunction complement() const;
  std::vector<Mask> zero_set() const;
  std::vector<Mask> one_set() const;
  std::size_t count_ones() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return is_zero() || is_one(); }
  bool is_symmetric() const noexcept;

  /// Value vector v(0..n) of a symmetric function; throws BadShape otherwise.
  std::vector<std::uint8_t> weight_values() const;

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

/// chi_q: 1 iff q divides the Hamming weight. Complement gives not-chi_q.
BooleanFunction mod_indicator(int n, int q);

/// A partial assignment: variables in `fixed` take the corresponding bits of
/// `values`. Unassigned variables are renumbered consecutively, in order.
struct Assignment {
  Mask fixed = 0;
  Mask values = 0;

  /// Assigns variable `var` (0-based) to `value`.
  Assignment& set(int var, bool value);
};

/// f restricted by a partial assignment, as a function of the free variables.
BooleanFunction restrict(const BooleanFunction& f, const Assignment& rho);

class MultilinearPoly {
 public:
  using Terms = std::map<Mask, Elem>;

  MultilinearPoly(Field field, int n);
  MultilinearPoly(Field field, int n, Terms terms);

  static MultilinearPoly constant(Field field, int n, Elem c);
  /// x_{var+1}.
  static MultilinearPoly variable(Field field, int n, int var);
  /// The unique multilinear polynomial with the given values (length 2^n),
  /// computed by the Moebius transform over the subset lattice.
  static MultilinearPoly interpolate(Field field, int n, std::span<const Elem> values);
  /// The 0/1 polynomial representing f.
  static MultilinearPoly indicator(Field field, const BooleanFunction& f);

  int arity() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest monomial size; nullopt for the zero polynomial.
  std::optional<int> degree() const noexcept;
  Elem coefficient(Mask monomial) const noexcept;
  /// Greatest monomial in graded-lex order; nullopt for zero.
  std::optional<Mask> leading_monomial() const noexcept;

  Elem evaluate(Mask point) const noexcept;
  /// Point as 0/1 entries; throws ArityMismatch if its length is not n.
  Elem evaluate(std::span<const std::uint8_t> point) const;
  /// Values at all 2^n points (zeta transform).
  std::vector<Elem> values() const;

  MultilinearPoly operator+(const MultilinearPoly& other) const;
  MultilinearPoly operator-(const MultilinearPoly& other) const;
  MultilinearPoly operator-() const;
  /// Product with x_i^2 = x_i; throws ArityMismatch / FieldMismatch.
  MultilinearPoly operator*(const MultilinearPoly& other) const;
  MultilinearPoly scaled(Elem c) const;

  MultilinearPoly restrict(const Assignment& rho) const;

  /// Signed monomial listing, highest degree first and lexicographic within a
  /// degree, e.g. "x1x3 - x1x4 - x2x3 + x2x4".
  std::string to_string() const;

  bool operator==(const MultilinearPoly& other) const noexcept {
    return n_ == other.n_ && field_ == other.field_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const MultilinearPoly& other) const;
  void add_term(Mask m, Elem c);

  Field field_;
  int n_;
  Terms terms_;
};

inline MultilinearPoly multiply(const MultilinearPoly& a, const MultilinearPoly& b) { return a * b; }

/// Rewrites an x-polynomial in the variables y_i = 1 + (omega - 1) x_i, or
/// y'_i = 1 + (omega^{-1} - 1) x_i when `inverse` is set. The result's masks
/// index y-monomials. Throws NotRootOfUnity for omega in {0, 1}.
MultilinearPoly y_transform(const MultilinearPoly& x_poly, Elem omega, bool inverse);
/// Inverse of y_transform: reads masks as y-monomials and returns x-form.
MultilinearPoly from_y_representation(const MultilinearPoly& y_poly, Elem omega, bool inverse);

/// g lies in the ideal <f> iff g vanishes on every zero of f.
bool ideal_member(const MultilinearPoly& g, const BooleanFunction& f);

/// prod_{i=1}^{n/2} (x_{2i-1} - x_{2i}) over F_p; needs n even and q | n/2.
MultilinearPoly tightness_witness(int n, int q, std::uint64_t p);

/// prod_{i <= ceil(n/2)} y_i - prod_{i > ceil(n/2)} y'_i in x-form over the
/// smallest extension of F_p holding a primitive q-th root of unity.
MultilinearPoly not_mod_upper_witness(int n, int q, std::uint64_t p);

struct TruthTableFile {
  BooleanFunction function;
  std::uint64_t p;
};

/// Text format: first line "n p", second line 2^n characters over {0,1},
/// character x is f(x). Throws ParseError.
TruthTableFile read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const BooleanFunction& f, std::uint64_t p);

}  // namespace imm
