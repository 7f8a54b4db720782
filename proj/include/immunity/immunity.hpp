#pragma once

// Immunity (weak p-degree): the least degree of a nonzero multilinear
// polynomial over F_p that vanishes on every zero of f.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "immunity/ring.hpp"

namespace imm {

enum class Method { General, Symmetric, Formula, Composite };

std::string_view to_string(Method m) noexcept;

struct ImmunityReport {
  /// nullopt when f is identically 0 (the ideal is {0}).
  std::optional<int> degree;
  std::optional<MultilinearPoly> witness;
  Method method = Method::General;
  /// Witness re-verified: member of <f> with exactly the reported degree.
  bool checked = false;
};

inline constexpr int kMaxImmunityVariables = 20;

/// Grows the monomial-evaluation matrix over zero_set(f) column by column in
/// graded-lex order; the first dependent column gives the witness, which is
/// the monic annihilator with the least graded-lex leading monomial.
/// Throws TooLarge for n > 20 or p >= 2^16.
ImmunityReport immunity(const BooleanFunction& f, std::uint64_t p);

/// Degree only; skips witness bookkeeping.
std::optional<int> immunity_degree(const BooleanFunction& f, std::uint64_t p);

/// min(immunity(f), immunity(not f)); throws ConstantFunction.
int two_sided_immunity(const BooleanFunction& f, std::uint64_t p);

struct WeakModResult {
  std::optional<int> degree;
  /// Prime factor of m achieving the minimum (the smallest one on ties).
  std::uint64_t prime = 0;
};

/// Minimum of the immunity over the prime factors of m (m >= 2).
WeakModResult weak_mod_m_degree(const BooleanFunction& f, std::uint64_t m);

/// Smallest d <= d_max such that some integer coefficient vector, not all
/// zero mod m, gives a polynomial of degree <= d vanishing mod m on
/// zero_set(f). Exhaustive search over Z_m with forced coefficients on the
/// zero set. Throws SearchBudgetExceeded when a level needs more than 10^7
/// assignments.
std::optional<int> brute_force_weak_mod_m(const BooleanFunction& f, std::uint64_t m, int d_max);

inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

struct ModBoundsReport {
  int n = 0;
  int q = 0;
  std::uint64_t p = 0;
  int chi = 0;          // immunity of chi_q
  int not_chi = 0;      // immunity of not chi_q
  int lower = 0;        // floor((n + 1) / 2)
  int not_chi_formula = 0;  // floor((n + q - 1) / q)
  bool tight_case = false;  // 2q | n
  int gap = 0;          // chi - lower
};

/// Computes both immunities of the MOD_q indicator and checks the lower
/// bound, tightness when 2q | n, and the exact value for not chi_q.
/// n <= 14; throws NotCoprime, TooLarge, AssertionFailure.
ModBoundsReport verify_mod_bounds(int n, int q, std::uint64_t p);

/// {"degree": int|null, "method": str, "witness": [{"mask","coeff"}], "checked": bool}
/// Witness terms are listed in graded-lex order.
std::string report_to_json(const ImmunityReport& r);

}  // namespace imm
