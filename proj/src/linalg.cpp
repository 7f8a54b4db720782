#include "immunity/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "immunity/error.hpp"

namespace imm {

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorKind::BadShape, "matrix data size mismatch");
  for (auto& v : data_) {
    if (field_.is_prime_field()) {
      v %= field_.characteristic();
    } else if (v >= field_.order()) {
      throw Error(ErrorKind::BadRange, "matrix entry is not a field element");
    }
  }
}

MatrixGF MatrixGF::identity(Field field, std::size_t n) {
  MatrixGF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

MatrixGF MatrixGF::from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::BadShape, "ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return MatrixGF(std::move(field), r, c, std::move(data));
}

void MatrixGF::set(std::size_t r, std::size_t c, Elem v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::BadRange, "matrix index out of range");
  if (field_.is_prime_field()) {
    v %= field_.characteristic();
  } else if (v >= field_.order()) {
    throw Error(ErrorKind::BadRange, "matrix entry is not a field element");
  }
  data_[r * cols_ + c] = v;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  }
  return t;
}

MatrixGF MatrixGF::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  MatrixGF s(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw Error(ErrorKind::BadRange, "submatrix index out of range");
      s.data_[i * cols.size() + j] = at(rows[i], cols[j]);
    }
  }
  return s;
}

std::string MatrixGF::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << field_.format(at(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

// Reduced row echelon form, columns scanned left to right.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;
  std::vector<std::size_t> pivot_cols;
};

Echelon rref_generic(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elem> data, bool full) {
  Echelon e{rows, cols, std::move(data), {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && e.data[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(e.data.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       e.data.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       e.data.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const Elem inv = f.inv(e.data[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) e.data[r * cols + j] = f.mul(e.data[r * cols + j], inv);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = e.data[i * cols + c];
      if (!factor) continue;
      for (std::size_t j = c; j < cols; ++j) {
        e.data[i * cols + j] = f.sub(e.data[i * cols + j], f.mul(factor, e.data[r * cols + j]));
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

struct PackedRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  bool test(std::size_t r, std::size_t c) const { return bits[r * words + c / 64] >> (c % 64) & 1; }
  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
  }
};

PackedRows pack(const MatrixGF& a) {
  PackedRows p{a.rows(), a.cols(), (a.cols() + 63) / 64, {}};
  p.bits.assign(p.rows * p.words, 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) & 1) p.bits[r * p.words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return p;
}

std::vector<std::size_t> rref_packed(PackedRows& m, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && !m.test(piv, c)) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t w = 0; w < m.words; ++w) std::swap(m.bits[piv * m.words + w], m.bits[r * m.words + w]);
    }
    for (std::size_t i = full ? 0 : r + 1; i < m.rows; ++i) {
      if (i != r && m.test(i, c)) m.xor_row(i, r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

bool use_packed(const MatrixGF& a, Backend backend) {
  const bool is_f2 = a.field().is_prime_field() && a.field().characteristic() == 2;
  if (backend == Backend::Packed && !is_f2) throw Error(ErrorKind::FieldMismatch, "packed backend requires F_2");
  return backend == Backend::Packed || (backend == Backend::Auto && is_f2);
}

std::vector<std::vector<Elem>> canonical_basis(const Field& f, std::vector<std::vector<Elem>> vectors,
                                               std::size_t dim) {
  if (vectors.empty()) return vectors;
  std::vector<Elem> flat;
  for (const auto& v : vectors) flat.insert(flat.end(), v.begin(), v.end());
  const Echelon e = rref_generic(f, vectors.size(), dim, std::move(flat), true);
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    out.emplace_back(e.data.begin() + static_cast<std::ptrdiff_t>(i * dim),
                     e.data.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
  }
  return out;
}

}  // namespace

std::size_t rank(const MatrixGF& a, Backend backend) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (use_packed(a, backend)) {
    PackedRows p = pack(a);
    return rref_packed(p, false).size();
  }
  return rref_generic(a.field(), a.rows(), a.cols(), a.data(), false).pivot_cols.size();
}

std::vector<std::vector<Elem>> nullspace_basis(const MatrixGF& a, Backend backend) {
  const std::size_t cols = a.cols();
  const Field& f = a.field();
  std::vector<std::vector<Elem>> basis;
  std::vector<std::size_t> pivots;
  std::vector<char> is_pivot(cols, 0);
  if (use_packed(a, backend)) {
    PackedRows p = pack(a);
    pivots = rref_packed(p, true);
    for (auto c : pivots) is_pivot[c] = 1;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Elem> v(cols, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = p.test(i, free) ? 1 : 0;
      basis.push_back(std::move(v));
    }
  } else {
    const Echelon e = a.rows() ? rref_generic(f, a.rows(), cols, a.data(), true) : Echelon{0, cols, {}, {}};
    pivots = e.pivot_cols;
    for (auto c : pivots) is_pivot[c] = 1;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Elem> v(cols, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(e.data[i * cols + free]);
      basis.push_back(std::move(v));
    }
  }
  return canonical_basis(f, std::move(basis), cols);
}

Elem det(const MatrixGF& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<Elem> m = a.data();
  Elem result = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      result = f.neg(result);
    }
    const Elem pivot = m[c * n + c];
    result = f.mul(result, pivot);
    const Elem inv = f.inv(pivot);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(m[i * n + c], inv);
      if (!factor) continue;
      for (std::size_t j = c; j < n; ++j) m[i * n + j] = f.sub(m[i * n + j], f.mul(factor, m[c * n + j]));
    }
  }
  return result;
}

namespace {

// Checks that every leading principal minor of the matrix whose rows are
// `order` (a permutation of 0..s-1) is nonzero: Gaussian elimination without
// row exchanges must meet a nonzero pivot at every step.
class LeadingMinorChecker {
 public:
  explicit LeadingMinorChecker(const MatrixGF& a) : a_(a), s_(a.rows()), p_(a.field().characteristic()) {
    small_ = a.field().is_prime_field() && p_ <= 256;
    if (small_) {
      mul_.resize(p_ * p_);
      for (std::uint64_t x = 0; x < p_; ++x) {
        for (std::uint64_t y = 0; y < p_; ++y) mul_[x * p_ + y] = static_cast<std::uint16_t>(x * y % p_);
      }
      inv_.assign(p_, 0);
      for (std::uint64_t x = 1; x < p_; ++x) inv_[x] = static_cast<std::uint16_t>(a.field().inv(x));
    }
    work_.resize(s_ * s_);
    work_elem_.resize(s_ * s_);
  }

  bool all_nonzero(std::span<const std::size_t> order) {
    return small_ ? check_small(order) : check_generic(order);
  }

 private:
  bool check_small(std::span<const std::size_t> order) {
    const std::size_t s = s_;
    const auto p = static_cast<std::uint16_t>(p_);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) work_[i * s + j] = static_cast<std::uint16_t>(a_.at(order[i], j));
    }
    for (std::size_t k = 0; k < s; ++k) {
      const std::uint16_t pivot = work_[k * s + k];
      if (!pivot) return false;
      const std::uint16_t pinv = inv_[pivot];
      for (std::size_t i = k + 1; i < s; ++i) {
        const std::uint16_t lead = work_[i * s + k];
        if (!lead) continue;
        const std::uint16_t factor = mul_[lead * p_ + pinv];
        const std::uint16_t* src = &mul_[factor * p_];
        for (std::size_t j = k + 1; j < s; ++j) {
          std::uint16_t v = static_cast<std::uint16_t>(work_[i * s + j] + p - src[work_[k * s + j]]);
          work_[i * s + j] = v >= p ? static_cast<std::uint16_t>(v - p) : v;
        }
      }
    }
    return true;
  }

  bool check_generic(std::span<const std::size_t> order) {
    const Field& f = a_.field();
    const std::size_t s = s_;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) work_elem_[i * s + j] = a_.at(order[i], j);
    }
    for (std::size_t k = 0; k < s; ++k) {
      const Elem pivot = work_elem_[k * s + k];
      if (!pivot) return false;
      const Elem pinv = f.inv(pivot);
      for (std::size_t i = k + 1; i < s; ++i) {
        const Elem factor = f.mul(work_elem_[i * s + k], pinv);
        if (!factor) continue;
        for (std::size_t j = k + 1; j < s; ++j) {
          work_elem_[i * s + j] = f.sub(work_elem_[i * s + j], f.mul(factor, work_elem_[k * s + j]));
        }
      }
    }
    return true;
  }

  const MatrixGF& a_;
  std::size_t s_;
  std::uint64_t p_;
  bool small_ = false;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> work_;
  std::vector<Elem> work_elem_;
};

}  // namespace

bool is_strong_nondegenerate(const MatrixGF& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "nondegeneracy needs a square matrix");
  const std::size_t s = a.rows();
  if (s > 16) throw Error(ErrorKind::TooLarge, "strong nondegeneracy is exhaustive; size must be <= 16");
  std::vector<std::size_t> rows, cols;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << s); ++subset) {
    rows.clear();
    for (std::size_t i = 0; i < s; ++i) {
      if (subset >> i & 1) rows.push_back(i);
    }
    cols.resize(rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    if (det(a.submatrix(rows, cols)) == 0) return false;
  }
  return true;
}

bool is_weak_nondegenerate(const MatrixGF& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "nondegeneracy needs a square matrix");
  const std::size_t s = a.rows();
  if (s > 64) throw Error(ErrorKind::TooLarge, "weak nondegeneracy check supports size <= 64");
  if (s == 0) return true;
  LeadingMinorChecker checker(a);
  std::vector<std::size_t> order(s);
  std::vector<char> seen(s);
  // Row selections depend on q only through q mod s, so one representative per
  // unit residue covers every q; t = 1..s is covered by the leading minors.
  for (std::size_t q = 1; q <= s; ++q) {
    if (gcd(q, s) != 1) continue;
    for (std::size_t start = 0; start < s; ++start) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t i = 0; i < s; ++i) {
        order[i] = (start + i * q) % s;
        if (seen[order[i]]) throw Error(ErrorKind::AssertionFailure, "progression revisited a row");
        seen[order[i]] = 1;
      }
      if (!checker.all_nonzero(order)) return false;
    }
  }
  return true;
}

MatrixGF tensor(const MatrixGF& a, const MatrixGF& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor factors live in different fields");
  const Field& f = a.field();
  MatrixGF t(f, a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Elem> data(t.rows() * t.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Elem x = a.at(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          data[(i1 * b.rows() + i2) * t.cols() + j1 * b.cols() + j2] = f.mul(x, b.at(i2, j2));
        }
      }
    }
  }
  return MatrixGF(f, t.rows(), t.cols(), std::move(data));
}

MatrixGF pascal_matrix(std::uint64_t p) {
  if (p > 64) throw Error(ErrorKind::TooLarge, "pascal matrix supports p <= 64");
  const Field f = Field::prime(p);
  MatrixGF m(f, p, p);
  std::vector<Elem> data(p * p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    data[i * p] = 1;
    for (std::size_t j = 1; j <= i; ++j) data[i * p + j] = (data[(i - 1) * p + j - 1] + data[(i - 1) * p + j]) % p;
  }
  return MatrixGF(f, p, p, std::move(data));
}

// ---------------------------------------------------------------------------
// IncrementalColumnBasis

struct IncrementalColumnBasis::Impl {
  explicit Impl(std::size_t rows, bool track) : rows(rows), track(track) {}
  virtual ~Impl() = default;
  virtual std::optional<std::vector<Elem>> add(std::span<const Elem> column) = 0;
  virtual std::optional<std::vector<Elem>> add_indicator(std::span<const std::size_t> one_rows) = 0;

  std::size_t rows;
  bool track;
  std::size_t rank = 0;
};

namespace {

class PackedBasis final : public IncrementalColumnBasis::Impl {
 public:
  PackedBasis(std::size_t rows, bool track) : Impl(rows, track), words_((rows + 63) / 64), v_(words_) {}

  std::optional<std::vector<Elem>> add(std::span<const Elem> column) override {
    std::fill(v_.begin(), v_.end(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (column[r] & 1) v_[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    return reduce();
  }

  std::optional<std::vector<Elem>> add_indicator(std::span<const std::size_t> one_rows) override {
    std::fill(v_.begin(), v_.end(), 0);
    for (auto r : one_rows) v_[r / 64] |= std::uint64_t{1} << (r % 64);
    return reduce();
  }

 private:
  std::optional<std::vector<Elem>> reduce() {
    const std::size_t comb_words = (rank + 1 + 63) / 64;
    comb_.assign(comb_words, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      const std::size_t r = pivots_[i];
      if (!(v_[r / 64] >> (r % 64) & 1)) continue;
      const std::uint64_t* b = &basis_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) v_[w] ^= b[w];
      if (track) {
        const auto& c = combos_[i];
        for (std::size_t w = 0; w < c.size(); ++w) comb_[w] ^= c[w];
      }
    }
    std::size_t pivot = rows;
    for (std::size_t w = 0; w < words_; ++w) {
      if (v_[w]) {
        pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v_[w]));
        break;
      }
    }
    if (pivot == rows) {
      std::vector<Elem> coeffs;
      if (track) {
        coeffs.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) coeffs[j] = comb_[j / 64] >> (j % 64) & 1;
      }
      return coeffs;
    }
    basis_.insert(basis_.end(), v_.begin(), v_.end());
    pivots_.push_back(pivot);
    if (track) {
      comb_[rank / 64] ^= std::uint64_t{1} << (rank % 64);
      combos_.push_back(comb_);
    }
    ++rank;
    return std::nullopt;
  }

  std::size_t words_;
  std::vector<std::uint64_t> v_;
  std::vector<std::uint64_t> comb_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint64_t>> combos_;
};

// Odd prime fields with p < 2^16. Accumulates in 32-bit lanes and reduces
// lazily: after each update an entry grows by at most (p-1)^2, so a full
// reduction is only due every `steps_per_reduction_` updates.
class PrimeBasis final : public IncrementalColumnBasis::Impl {
 public:
  PrimeBasis(const Field& field, std::size_t rows, bool track)
      : Impl(rows, track), field_(field), p_(static_cast<std::uint32_t>(field.characteristic())), v_(rows) {
    const std::uint64_t sq = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
    steps_per_reduction_ = sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                                   : (std::numeric_limits<std::uint32_t>::max() - p_) / sq;
  }

  std::optional<std::vector<Elem>> add(std::span<const Elem> column) override {
    for (std::size_t r = 0; r < rows; ++r) v_[r] = static_cast<std::uint32_t>(column[r] % p_);
    return reduce();
  }

  std::optional<std::vector<Elem>> add_indicator(std::span<const std::size_t> one_rows) override {
    std::fill(v_.begin(), v_.end(), 0);
    for (auto r : one_rows) v_[r] = 1;
    return reduce();
  }

 private:
  std::optional<std::vector<Elem>> reduce() {
    const std::uint32_t p = p_;
    comb_.assign(rank + 1, 0);
    std::uint64_t v_steps = 0, comb_steps = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      const std::size_t r = pivots_[i];
      const std::uint32_t c = v_[r] % p;
      if (!c) continue;
      const std::uint32_t factor = p - c;
      if (++v_steps > steps_per_reduction_) {
        for (auto& x : v_) x %= p;
        v_steps = 1;
      }
      const std::uint32_t* b = &basis_[i * rows];
      std::uint32_t* v = v_.data();
      for (std::size_t k = 0; k < rows; ++k) v[k] += factor * b[k];
      if (track) {
        if (++comb_steps > steps_per_reduction_) {
          for (auto& x : comb_) x %= p;
          comb_steps = 1;
        }
        const auto& cb = combos_[i];
        std::uint32_t* acc = comb_.data();
        for (std::size_t j = 0; j < cb.size(); ++j) acc[j] += factor * cb[j];
      }
    }
    for (auto& x : v_) x %= p;
    std::size_t pivot = rows;
    for (std::size_t k = 0; k < rows; ++k) {
      if (v_[k]) {
        pivot = k;
        break;
      }
    }
    if (pivot == rows) {
      std::vector<Elem> coeffs;
      if (track) {
        // column + sum_i factor_i b_i = 0, and comb_ holds sum_i factor_i b_i
        // in accepted-column coordinates.
        coeffs.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) {
          const std::uint32_t x = comb_[j] % p;
          coeffs[j] = x == 0 ? 0 : p - x;
        }
      }
      return coeffs;
    }
    const auto inv = static_cast<std::uint32_t>(field_.inv(v_[pivot]));
    for (auto& x : v_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
    basis_.insert(basis_.end(), v_.begin(), v_.end());
    pivots_.push_back(pivot);
    if (track) {
      comb_[rank] += 1;
      for (auto& x : comb_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x % p) * inv % p);
      combos_.push_back(comb_);
    }
    ++rank;
    return std::nullopt;
  }

  Field field_;
  std::uint32_t p_;
  std::uint64_t steps_per_reduction_;
  std::vector<std::uint32_t> v_;
  std::vector<std::uint32_t> comb_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> combos_;
};

}  // namespace

IncrementalColumnBasis::IncrementalColumnBasis(const Field& field, std::size_t rows, bool track_combinations) {
  if (!field.is_prime_field()) throw Error(ErrorKind::FieldMismatch, "incremental basis works over prime fields");
  if (field.characteristic() == 2) {
    impl_ = std::make_unique<PackedBasis>(rows, track_combinations);
  } else if (field.characteristic() < 65536) {
    impl_ = std::make_unique<PrimeBasis>(field, rows, track_combinations);
  } else {
    throw Error(ErrorKind::TooLarge, "incremental basis supports p < 65536");
  }
}

IncrementalColumnBasis::~IncrementalColumnBasis() = default;
IncrementalColumnBasis::IncrementalColumnBasis(IncrementalColumnBasis&&) noexcept = default;
IncrementalColumnBasis& IncrementalColumnBasis::operator=(IncrementalColumnBasis&&) noexcept = default;

std::optional<std::vector<Elem>> IncrementalColumnBasis::add_column(std::span<const Elem> column) {
  if (column.size() != impl_->rows) throw Error(ErrorKind::BadShape, "column length != row count");
  return impl_->add(column);
}

std::optional<std::vector<Elem>> IncrementalColumnBasis::add_indicator_column(std::span<const std::size_t> one_rows) {
  for (auto r : one_rows) {
    if (r >= impl_->rows) throw Error(ErrorKind::BadRange, "row index out of range");
  }
  return impl_->add_indicator(one_rows);
}

std::size_t IncrementalColumnBasis::rank() const noexcept { return impl_->rank; }
std::size_t IncrementalColumnBasis::rows() const noexcept { return impl_->rows; }

}  // namespace imm
