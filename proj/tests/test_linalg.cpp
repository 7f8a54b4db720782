#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "immunity/error.hpp"
#include "immunity/linalg.hpp"
#include "oracles.hpp"

using namespace imm;

namespace {

oracle::Mat to_oracle(const MatrixGF& a) {
  oracle::Mat m(a.rows(), oracle::Vec(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
  return m;
}

MatrixGF random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 0) {
  MatrixGF m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng() % 4) < zero_bias ? 0 : rng() % f.order());
  return m;
}

bool strong_oracle(const MatrixGF& a) {
  const std::size_t s = a.rows();
  const auto m = to_oracle(a);
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    oracle::Mat sub;
    const std::size_t t = static_cast<std::size_t>(__builtin_popcount(mask));
    for (std::size_t r = 0; r < s; ++r)
      if (mask >> r & 1) sub.emplace_back(m[r].begin(), m[r].begin() + static_cast<long>(t));
    if (oracle::det_leibniz(sub, a.field().characteristic()) == 0) return false;
  }
  return true;
}

bool weak_oracle(const MatrixGF& a) {
  const std::size_t s = a.rows();
  const auto m = to_oracle(a);
  for (std::size_t q = 1; q <= s; ++q) {
    if (std::gcd(q, s) != 1) continue;
    for (std::size_t start = 0; start < s; ++start)
      for (std::size_t t = 1; t <= s; ++t) {
        oracle::Mat sub;
        for (std::size_t i = 0; i < t; ++i) {
          const auto& row = m[(start + i * q) % s];
          sub.emplace_back(row.begin(), row.begin() + static_cast<long>(t));
        }
        if (oracle::det_leibniz(sub, a.field().characteristic()) == 0) return false;
      }
  }
  return true;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::AssertionFailure;
}

}  // namespace

TEST_CASE("rank examples") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
  CHECK(rank(MatrixGF::identity(f2, 3)) == 3);
  CHECK(rank(MatrixGF(f3, 4, 4, std::vector<Elem>(16, 1))) == 1);
  CHECK(rank(MatrixGF::from_rows(f5, {{1, 1, 0}, {1, 3, 3}, {1, 5, 10}})) == 3);
  CHECK(rank(MatrixGF(f3, 0, 5)) == 0);
}

TEST_CASE("rank against the span oracle") {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % (p == 2 ? 8 : 5), cols = 1 + rng() % 7;
      const auto a = random_matrix(f, rows, cols, rng, trial % 4);
      const auto want = oracle::rank_by_span(to_oracle(a), p);
      REQUIRE(rank(a) == want);
      REQUIRE(rank(a, Backend::Generic) == want);
      REQUIRE(rank(a.transpose()) == want);
      if (p == 2) REQUIRE(rank(a, Backend::Packed) == want);
    }
  }
}

TEST_CASE("packed and generic backends agree on wide F_2 matrices") {
  std::mt19937_64 rng(22);
  const Field f = Field::prime(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 150, cols = 1 + rng() % 150;
    const auto a = random_matrix(f, rows, cols, rng, trial % 4);
    REQUIRE(rank(a, Backend::Packed) == rank(a, Backend::Generic));
    REQUIRE(nullspace_basis(a, Backend::Packed) == nullspace_basis(a, Backend::Generic));
  }
  CHECK(kind_of([] { rank(MatrixGF::identity(Field::prime(3), 2), Backend::Packed); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("nullspace") {
  const Field f2 = Field::prime(2);
  CHECK(nullspace_basis(MatrixGF::identity(f2, 3)).empty());
  const auto z = nullspace_basis(MatrixGF(Field::prime(3), 2, 3));
  CHECK(z == std::vector<std::vector<Elem>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(nullspace_basis(MatrixGF::from_rows(f2, {{1, 1}})) == std::vector<std::vector<Elem>>{{1, 1}});

  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2, 3, 7}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
      const auto a = random_matrix(f, rows, cols, rng, trial % 4);
      const auto basis = nullspace_basis(a);
      REQUIRE(basis.size() + rank(a) == cols);
      std::size_t last_lead = 0;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& v = basis[k];
        std::size_t lead = 0;
        while (lead < cols && v[lead] == 0) ++lead;
        REQUIRE(lead < cols);
        REQUIRE(v[lead] == 1);
        if (k > 0) REQUIRE(lead > last_lead);
        last_lead = lead;
        for (std::size_t r = 0; r < rows; ++r) {
          Elem s = 0;
          for (std::size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(a.at(r, c), v[c]));
          REQUIRE(s == 0);
        }
      }
      oracle::Mat vs;
      for (const auto& v : basis) vs.emplace_back(v.begin(), v.end());
      if (!vs.empty() && vs.size() <= 6) REQUIRE(oracle::rank_by_span(vs, p) == vs.size());
    }
  }
}

TEST_CASE("det") {
  const Field f5 = Field::prime(5);
  CHECK(det(MatrixGF::from_rows(f5, {{1, 1, 0}, {1, 3, 3}, {1, 5, 10}})) == 3);
  CHECK(det(MatrixGF::identity(f5, 4)) == 1);
  CHECK(det(MatrixGF(Field::prime(3), 2, 2, {1, 1, 1, 1})) == 0);
  CHECK(kind_of([&] { det(MatrixGF(f5, 2, 3)); }) == ErrorKind::NotSquare);
  std::mt19937_64 rng(24);
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t s = 1 + rng() % 6;
      const auto a = random_matrix(f, s, s, rng, trial % 3);
      REQUIRE(det(a) == oracle::det_leibniz(to_oracle(a), p));
    }
  }
  // Extension field: det(AB) = det(A) det(B).
  const auto root = find_root_of_unity(2, 7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(root.field, 4, 4, rng), b = random_matrix(root.field, 4, 4, rng);
    MatrixGF ab(root.field, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Elem s = 0;
        for (std::size_t k = 0; k < 4; ++k) s = root.field.add(s, root.field.mul(a.at(i, k), b.at(k, j)));
        ab.set(i, j, s);
      }
    REQUIRE(det(ab) == root.field.mul(det(a), det(b)));
    REQUIRE((det(a) != 0) == (rank(a) == 4));
  }
}

TEST_CASE("pascal matrices") {
  CHECK(pascal_matrix(2) == MatrixGF::from_rows(Field::prime(2), {{1, 0}, {1, 1}}));
  CHECK(pascal_matrix(3) == MatrixGF::from_rows(Field::prime(3), {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
  const auto p5 = pascal_matrix(5);
  const std::vector<Elem> row4(p5.row(4).begin(), p5.row(4).end());
  CHECK(row4 == std::vector<Elem>{1, 4, 1, 4, 1});
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const auto m = pascal_matrix(p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) REQUIRE(m.at(i, j) == oracle::binomial_exact(unsigned(i), unsigned(j)) % p);
  }
  CHECK(kind_of([] { pascal_matrix(67); }) == ErrorKind::TooLarge);
}

TEST_CASE("tensor") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const auto b = MatrixGF::from_rows(f3, {{1, 2}, {0, 1}});
  CHECK(tensor(MatrixGF::identity(f3, 2), b) ==
        MatrixGF::from_rows(f3, {{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}}));
  CHECK(tensor(b, MatrixGF::identity(f3, 1)) == b);
  const auto t = tensor(pascal_matrix(2), pascal_matrix(2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(t.at(i, j) == oracle::binomial_exact(unsigned(i), unsigned(j)) % 2);
  CHECK(kind_of([&] { tensor(b, MatrixGF::identity(f2, 1)); }) == ErrorKind::FieldMismatch);
  // rank is multiplicative.
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_matrix(f3, 1 + rng() % 3, 1 + rng() % 3, rng, 1);
    const auto y = random_matrix(f3, 1 + rng() % 3, 1 + rng() % 3, rng, 1);
    REQUIRE(rank(tensor(x, y)) == rank(x) * rank(y));
  }
}

TEST_CASE("strong and weak nondegeneracy examples") {
  const Field f2 = Field::prime(2);
  CHECK(is_strong_nondegenerate(pascal_matrix(2)));
  CHECK_FALSE(is_strong_nondegenerate(MatrixGF::identity(f2, 2)));
  CHECK(is_strong_nondegenerate(pascal_matrix(3)));
  CHECK(is_weak_nondegenerate(tensor(pascal_matrix(2), pascal_matrix(2))));
  for (std::size_t s = 2; s <= 6; ++s) CHECK_FALSE(is_weak_nondegenerate(MatrixGF::identity(f2, s)));
  CHECK(is_weak_nondegenerate(MatrixGF::identity(f2, 1)));
  CHECK(kind_of([] { is_strong_nondegenerate(MatrixGF::identity(Field::prime(2), 17)); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { is_weak_nondegenerate(MatrixGF::identity(Field::prime(2), 65)); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { is_weak_nondegenerate(MatrixGF(Field::prime(2), 2, 3)); }) == ErrorKind::NotSquare);
}

TEST_CASE("nondegeneracy against determinant oracles") {
  std::mt19937_64 rng(26);
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    int strong_seen = 0, weak_seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      const std::size_t s = 1 + rng() % 4;
      const auto a = random_matrix(f, s, s, rng);
      const bool strong = is_strong_nondegenerate(a);
      const bool weak = is_weak_nondegenerate(a);
      REQUIRE(strong == strong_oracle(a));
      REQUIRE(weak == weak_oracle(a));
      if (strong) REQUIRE(weak);
      strong_seen += strong;
      weak_seen += weak;
    }
    CHECK(strong_seen > 0);
    CHECK(weak_seen > strong_seen);
  }
}

TEST_CASE("incremental column basis matches rank") {
  std::mt19937_64 rng(27);
  for (std::uint64_t p : {2, 3, 5, 65521}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 50;
      const auto a = random_matrix(f, rows, cols, rng, trial % 4);
      IncrementalColumnBasis basis(f, rows);
      std::vector<std::vector<Elem>> accepted;
      for (std::size_t c = 0; c < cols; ++c) {
        std::vector<Elem> col(rows);
        for (std::size_t r = 0; r < rows; ++r) col[r] = a.at(r, c);
        const auto dep = basis.add_column(col);
        if (!dep) {
          accepted.push_back(col);
          continue;
        }
        REQUIRE(dep->size() == accepted.size());
        for (std::size_t r = 0; r < rows; ++r) {
          Elem s = 0;
          for (std::size_t j = 0; j < accepted.size(); ++j) s = f.add(s, f.mul((*dep)[j], accepted[j][r]));
          REQUIRE(s == col[r]);
        }
      }
      REQUIRE(basis.rank() == rank(a));
      REQUIRE(basis.rows() == rows);
    }
  }
}

TEST_CASE("incremental basis: indicator columns and long F_2 runs") {
  std::mt19937_64 rng(28);
  for (std::uint64_t p : {2, 3}) {
    const Field f = Field::prime(p);
    const std::size_t rows = 200;
    IncrementalColumnBasis basis(f, rows), plain(f, rows, false);
    MatrixGF m(f, rows, 260);
    for (std::size_t c = 0; c < 260; ++c) {
      std::vector<std::size_t> ones;
      std::vector<Elem> col(rows, 0);
      for (std::size_t r = 0; r < rows; ++r)
        if (rng() % 3 == 0) {
          ones.push_back(r);
          col[r] = 1;
          m.set(r, c, 1);
        }
      const bool dep1 = basis.add_indicator_column(ones).has_value();
      const auto dep2 = plain.add_column(col);
      REQUIRE(dep1 == dep2.has_value());
      if (dep2) REQUIRE(dep2->empty());
    }
    CHECK(basis.rank() == rank(m));
    CHECK(plain.rank() == rank(m));
  }
  CHECK(kind_of([] { IncrementalColumnBasis(Field::prime(65537), 3); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { IncrementalColumnBasis(find_root_of_unity(2, 3).field, 3); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("matrix entries") {
  const auto f4 = find_root_of_unity(2, 3).field;
  CHECK(kind_of([&] { MatrixGF(f4, 1, 1, {4}); }) == ErrorKind::BadRange);
  const MatrixGF m(Field::prime(5), 1, 2, {7, 10});
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
}
