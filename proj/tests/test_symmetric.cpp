#include <doctest.h>

#include <functional>
#include <algorithm>
#include <array>
#include <random>

#include "immunity/error.hpp"
#include "immunity/linalg.hpp"
#include "immunity/symmetric.hpp"
#include "oracles.hpp"

using namespace imm;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::AssertionFailure;
}

SymmetricFn sym_bool(const std::vector<Elem>& v, std::uint64_t p) { return SymmetricFn::from_values(v, p); }

BooleanFunction random_symmetric(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n) + 1);
  do {
    for (auto& e : v) e = rng() % 2;
  } while (std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }));
  return BooleanFunction::symmetric(n, v);
}

}  // namespace

TEST_CASE("Lucas binomials") {
  CHECK(lucas_binomial(5, 2, 3) == 1);
  CHECK(lucas_binomial(4, 1, 2) == 0);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (unsigned w = 0; w <= 40; ++w) {
      CHECK(lucas_binomial(w, 0, p) == 1);
      for (unsigned k = 0; k <= w + 2; ++k) REQUIRE(lucas_binomial(w, k, p) == oracle::binomial_exact(w, k) % p);
    }
  }
  CHECK(lucas_binomial(1000000, 1000, 65521) < 65521);
  CHECK(kind_of([] { lucas_binomial(5, 2, 4); }) == ErrorKind::NotPrime);
}

TEST_CASE("value and coefficient vectors") {
  CHECK(values_from_coeffs({1, 0, 0, 0}, 3) == std::vector<Elem>{1, 1, 1, 1});
  CHECK(values_from_coeffs({0, 1, 0, 0, 0}, 2) == std::vector<Elem>{0, 1, 0, 1, 0});
  std::mt19937_64 rng(41);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Elem> v(1 + rng() % 20);
      for (auto& e : v) e = rng() % p;
      REQUIRE(values_from_coeffs(coeffs_from_values(v, p), p) == v);
      REQUIRE(coeffs_from_values(values_from_coeffs(v, p), p) == v);
    }
  }
  // Values agree with evaluating sum_j c_j sigma_j on a point of each weight.
  const Field f5 = Field::prime(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Elem> c(static_cast<std::size_t>(n) + 1);
    for (auto& e : c) e = rng() % 5;
    MultilinearPoly::Terms t;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (c[popcount(m)]) t[m] = c[popcount(m)];
    const MultilinearPoly g(f5, n, t);
    const auto v = values_from_coeffs(c, 5);
    for (int w = 0; w <= n; ++w) REQUIRE(g.evaluate((Mask{1} << w) - 1) == v[w]);
  }
}

TEST_CASE("psi") {
  CHECK(psi(3, 2, 5) == std::vector<Elem>{1, 2, 1});
  CHECK(psi(3, 4, 2) == std::vector<Elem>{1, 0, 0});
  CHECK(kind_of([] { psi(0, 2, 5); }) == ErrorKind::BadRange);
  const auto m = psi_matrix(3, {1, 3, 5}, 5);
  CHECK(rank(m) == 3);
  CHECK(det(psi_matrix(3, {1, 3, 5}, 5)) == 3);
}

TEST_CASE("symmetric function construction") {
  const auto f = SymmetricFn::from_boolean(mod_indicator(6, 3), 2);
  CHECK(f.arity() == 6);
  CHECK(f.values() == std::vector<Elem>{1, 0, 0, 1, 0, 0, 1});
  CHECK(f.zero_weights() == std::vector<std::uint64_t>{1, 2, 4, 5});
  CHECK(f.to_boolean() == mod_indicator(6, 3));
  CHECK(values_from_coeffs(f.coeffs(), 2) == f.values());
  CHECK(SymmetricFn::from_values({0, 0, 0}, 3).is_zero());
  CHECK_FALSE(SymmetricFn::from_values({0, 0, 0}, 3).degree().has_value());
  CHECK(SymmetricFn::from_coeffs({1, 0, 2}, 3).degree() == 2);
  CHECK(SymmetricFn::from_values({4, 7}, 3).values() == std::vector<Elem>{1, 1});
  CHECK(kind_of([] { SymmetricFn::from_boolean(BooleanFunction(2, {0, 1, 0, 0}), 2); }) == ErrorKind::BadShape);
}

TEST_CASE("restrict_sym") {
  const auto chi = SymmetricFn::from_boolean(mod_indicator(6, 3), 2);
  CHECK(restrict_sym(chi, 0).values() == chi.values());
  CHECK(restrict_sym(chi, 1).values() == std::vector<Elem>{0, 0, 1, 0, 0});
  const auto odd = sym_bool({1, 0, 1, 1, 0, 1, 0, 1}, 3);
  CHECK(restrict_sym(odd, 3).values() == std::vector<Elem>{1, 0});
  CHECK(kind_of([&] { restrict_sym(chi, 4); }) == ErrorKind::BadRange);
  CHECK(kind_of([&] { restrict_sym(chi, -1); }) == ErrorKind::BadRange);
}

TEST_CASE("minimum symmetric annihilator") {
  const auto notchi = SymmetricFn::from_boolean(mod_indicator(6, 3).complement(), 2);
  auto a = min_symmetric_annihilator(notchi);
  CHECK(a.degree == 3);
  REQUIRE(a.coeffs.size() == 4);
  CHECK(a.coeffs.back() == 1);
  std::vector<Elem> c = a.coeffs;
  c.resize(7, 0);
  const auto vals = values_from_coeffs(c, 2);
  for (auto w : notchi.zero_weights()) CHECK(vals[w] == 0);
  CHECK(min_symmetric_annihilator_degree(sym_bool({1, 1, 1, 1}, 5)) == 0);
  CHECK_FALSE(min_symmetric_annihilator_degree(sym_bool({0, 0, 0}, 5)).has_value());
  // Zero weights a, a+q, ..., a+(t-1)q with q coprime to p need degree exactly t.
  for (std::uint64_t p : {2, 3, 5}) {
    for (int q = 1; q <= 7; ++q) {
      if (q % static_cast<int>(p) == 0) continue;
      for (int t = 1; t <= 4; ++t) {
        const int a0 = 1;
        const int n = a0 + (t - 1) * q + 2;
        std::vector<Elem> vals(static_cast<std::size_t>(n) + 1, 1);
        for (int i = 0; i < t; ++i) vals[a0 + i * q] = 0;
        CHECK(min_symmetric_annihilator_degree(sym_bool(vals, p)) == t);
      }
    }
  }
}

TEST_CASE("symmetric immunity matches the general path") {
  CHECK(symmetric_immunity(SymmetricFn::from_boolean(mod_indicator(6, 3).complement(), 2)).degree == 2);
  const auto r = symmetric_immunity(SymmetricFn::from_boolean(mod_indicator(6, 3), 2));
  CHECK(r.degree == 3);
  CHECK(r.method == Method::Symmetric);
  CHECK(r.checked);
  CHECK(symmetric_immunity(SymmetricFn::from_boolean(mod_indicator(5, 2), 3)).degree ==
        immunity(mod_indicator(5, 2), 3).degree);
  CHECK(kind_of([] { symmetric_immunity(SymmetricFn::from_values({0, 0}, 2)); }) == ErrorKind::ZeroFunction);

  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2, 3, 5}) {
    for (int n = 1; n <= 9; ++n) {
      for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_symmetric(n, rng);
        const auto rs = symmetric_immunity(SymmetricFn::from_boolean(f, p));
        REQUIRE(rs.degree == immunity_degree(f, p));
        REQUIRE(symmetric_immunity_degree(SymmetricFn::from_boolean(f, p)) == *rs.degree);
        REQUIRE(rs.witness);
        REQUIRE(rs.witness->degree() == rs.degree);
        REQUIRE(ideal_member(*rs.witness, f));
      }
    }
  }
}

TEST_CASE("symmetric immunity beyond the truth-table range") {
  // not chi_q has immunity floor((n + q - 1) / q) for every n.
  for (int n : {24, 40, 63}) {
    for (int q : {3, 5}) {
      std::vector<Elem> v(static_cast<std::size_t>(n) + 1);
      for (int w = 0; w <= n; ++w) v[w] = w % q != 0;
      const auto f = sym_bool(v, 2);
      const auto r = symmetric_immunity(f);
      CHECK(r.degree == (n + q - 1) / q);
      CHECK(r.checked);
      CHECK_FALSE(r.witness.has_value());
    }
  }
}

TEST_CASE("reflexive duality") {
  std::vector<int> all(9);
  for (int i = 0; i <= 8; ++i) all[i] = i;
  for (auto dir : {DualDirection::Values, DualDirection::Coeffs}) {
    CHECK(reflex_dual_exists(all, 1, 8, 3, dir));
    CHECK_FALSE(reflex_dual_exists({}, 3, 8, 3, dir));
  }
  const std::vector<int> mult3 = {0, 3, 6};
  CHECK(reflex_dual_exists(mult3, 4, 8, 2, DualDirection::Values) ==
        reflex_dual_exists(mult3, 4, 8, 2, DualDirection::Coeffs));
  CHECK(kind_of([] { reflex_dual_exists({0}, 10, 8, 2, DualDirection::Values); }) == ErrorKind::BadRange);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3];
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> s;
    for (int w = 0; w <= n; ++w)
      if (rng() % 2) s.push_back(w);
    const int d = static_cast<int>(rng() % (n + 2));
    const bool values = reflex_dual_exists(s, d, n, p, DualDirection::Values);
    REQUIRE(values == reflex_dual_exists(s, d, n, p, DualDirection::Coeffs));
    // Direct search for small n: a nonzero coefficient vector of degree < d whose
    // value vector is supported in S.
    if (n <= 5 && p <= 3) {
      bool found = false;
      std::vector<Elem> c(static_cast<std::size_t>(n) + 1, 0);
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= p;
      for (std::uint64_t code = 1; code < total && !found; ++code) {
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i) {
          c[i] = x % p;
          x /= p;
        }
        const auto v = values_from_coeffs(c, p);
        bool ok = true;
        for (int w = 0; w <= n && ok; ++w)
          if (v[w] != 0 && std::find(s.begin(), s.end(), w) == s.end()) ok = false;
        found = ok;
      }
      REQUIRE(found == values);
    }
  }
}

TEST_CASE("restriction bound") {
  auto r = restriction_bound_check(8, 3, 3);
  CHECK(r.l == 0);
  CHECK(r.n_prime == 0);
  CHECK(r.bound_num == 0);
  CHECK(r.holds);
  r = restriction_bound_check(26, 10, 3);
  CHECK(r.l == 2);
  CHECK(r.p_l == 9);
  CHECK(r.n_prime == 0);
  CHECK(r.measured >= 24);
  CHECK(r.holds);
  r = restriction_bound_check(15, 3, 2);
  CHECK(r.l == 1);
  CHECK(r.measured >= 8);
  CHECK(r.holds);
  CHECK(r.upper_reported == 9);
  CHECK(kind_of([] { restriction_bound_check(300, 3, 2); }) == ErrorKind::TooLarge);
}
