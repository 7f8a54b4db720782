#include "immunity/hilbert.hpp"

#include <algorithm>

#include "immunity/error.hpp"
#include "immunity/immunity.hpp"
#include "immunity/linalg.hpp"

namespace imm {

PointSet::PointSet(int n, std::vector<Mask> points) : n_(n), points_(std::move(points)) {
  if (n < 0 || n > kMaxVariables) throw Error(ErrorKind::TooLarge, "point set arity outside [0, 24]");
  for (Mask x : points_) {
    if (n < 32 && (x >> n) != 0) throw Error(ErrorKind::BadRange, "point has bits beyond n");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::zero_set(const BooleanFunction& f) { return PointSet(f.arity(), f.zero_set()); }

namespace {

std::vector<Mask> checked_columns(const PointSet& s, int m) {
  if (m < 0 || m > s.arity()) throw Error(ErrorKind::BadRange, "degree m outside [0, n]");
  const std::uint64_t cols = binomial_prefix(s.arity(), m);
  if (s.size() && cols > kHilbertBudget / s.size()) throw Error(ErrorKind::TooLarge, "evaluation matrix too large");
  return monomials_graded_lex(s.arity(), m);
}

}  // namespace

std::uint64_t hilbert_function(const PointSet& s, int m, std::uint64_t p) {
  const auto monos = checked_columns(s, m);
  if (s.size() == 0) return 0;
  IncrementalColumnBasis basis(Field::prime(p), s.size(), false);
  std::vector<std::size_t> ones;
  for (Mask mono : monos) {
    if (basis.rank() == s.size()) break;
    ones.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((s.points()[i] & mono) == mono) ones.push_back(i);
    }
    basis.add_indicator_column(ones);
  }
  return basis.rank();
}

std::uint64_t annihilator_dim(const PointSet& s, int m, std::uint64_t p) {
  const auto monos = checked_columns(s, m);
  const Field field = Field::prime(p);
  MatrixGF a(field, s.size(), monos.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if ((s.points()[i] & monos[j]) == monos[j]) a.set(i, j, 1);
    }
  }
  const std::uint64_t dim = nullspace_basis(a).size();
  if (dim + hilbert_function(s, m, p) != monos.size()) {
    throw Error(ErrorKind::AssertionFailure, "annihilator dimension plus Hilbert function != C(n, <= m)");
  }
  return dim;
}

std::int64_t smolensky_bound(const BooleanFunction& f, int d, std::uint64_t p) {
  const int n = f.arity();
  if (d < 0 || n < d + 1) throw Error(ErrorKind::BadRange, "Smolensky bound needs 0 <= d <= n - 1");
  const PointSet z = PointSet::zero_set(f);
  const int m = (n - d - 1) / 2;
  return 2 * static_cast<std::int64_t>(hilbert_function(z, m, p)) - static_cast<std::int64_t>(z.size());
}

std::uint64_t brute_force_min_distance(const BooleanFunction& f, int d, std::uint64_t p) {
  const Field field = Field::prime(p);
  const int n = f.arity();
  if (d < 0) throw Error(ErrorKind::BadRange, "degree must be >= 0");
  const auto monos = monomials_graded_lex(n, std::min(d, n));
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (space > kBruteForceBudget / p) {
      throw Error(ErrorKind::SearchBudgetExceeded, "p^{C(n, <= d)} exceeds 10^7");
    }
    space *= p;
  }
  const std::size_t points = f.size();
  // Odometer over coefficient vectors. Raising digit k by one (with the lower
  // digits wrapping from p - 1 to 0) adds columns 0..k to the value vector.
  std::vector<Elem> digits(monos.size(), 0);
  std::vector<Elem> values(points, 0);
  auto distance = [&] {
    std::uint64_t dist = 0;
    for (Mask x = 0; x < points; ++x) dist += f(x) != (values[x] != 0);
    return dist;
  };
  std::uint64_t best = distance();
  for (;;) {
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == p - 1) ++k;
    if (k == digits.size()) break;
    for (std::size_t j = 0; j <= k; ++j) {
      digits[j] = j == k ? digits[j] + 1 : 0;
      const Mask mono = monos[j];
      for (Mask x = 0; x < points; ++x) {
        if ((x & mono) == mono) values[x] = field.add(values[x], 1);
      }
    }
    best = std::min(best, distance());
  }
  return best;
}

}  // namespace imm
