#pragma once

// Hilbert functions of point sets in {0,1}^n and the Smolensky distance bound.

#include <cstdint>
#include <vector>

#include "immunity/ring.hpp"

namespace imm {

class PointSet {
 public:
  /// Points are n-bit masks; duplicates are dropped and the rest sorted.
  PointSet(int n, std::vector<Mask> points);
  static PointSet zero_set(const BooleanFunction& f);

  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Mask>& points() const noexcept { return points_; }

 private:
  int n_;
  std::vector<Mask> points_;
};

/// Rows times columns allowed for one evaluation matrix.
inline constexpr std::uint64_t kHilbertBudget = std::uint64_t{1} << 32;

/// Rank of the |S| x C(n, <= m) matrix of monomial evaluations over F_p.
/// Throws BadRange (m outside [0, n]) and TooLarge.
std::uint64_t hilbert_function(const PointSet& s, int m, std::uint64_t p);

/// Dimension of the degree <= m polynomials vanishing on S, from an explicit
/// nullspace. Checks that it plus hilbert_function equals C(n, <= m).
std::uint64_t annihilator_dim(const PointSet& s, int m, std::uint64_t p);

/// 2 h_m(Z(f)) - |Z(f)| with m = floor((n - d - 1) / 2); not clamped.
/// Needs d >= 0 and n >= d + 1 (BadRange).
std::int64_t smolensky_bound(const BooleanFunction& f, int d, std::uint64_t p);

/// min over polynomials g of degree <= d of |{x : f(x) != [g(x) != 0]}|,
/// by exhaustive enumeration. Throws SearchBudgetExceeded when
/// p^{C(n, <= d)} > 10^7.
std::uint64_t brute_force_min_distance(const BooleanFunction& f, int d, std::uint64_t p);

}  // namespace imm
