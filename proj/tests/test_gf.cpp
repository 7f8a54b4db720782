#include <doctest.h>

#include <random>

#include "immunity/error.hpp"
#include "immunity/gf.hpp"
#include "oracles.hpp"

using namespace imm;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<Field> small_fields() {
  std::vector<Field> fs;
  for (std::uint64_t p = 2; p < 256; ++p) {
    if (is_prime(p)) fs.push_back(Field::prime(p));
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned k = 2; ipow(p, k) <= 256; ++k) fs.push_back(Field::extension(p, first_irreducible(p, k)));
  }
  return fs;
}

}  // namespace

TEST_CASE("prime field construction") {
  const Field f5 = make_prime_field(5);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.describe() == "F_5");
  CHECK_THROWS_AS(make_prime_field(4), Error);
  try {
    make_prime_field(4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  const Field f2 = make_prime_field(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f5.from_int(-1) == 4);
}

TEST_CASE("extension field description") {
  const Field f4 = Field::extension(2, {1, 1, 1});
  CHECK(f4.describe() == "F_2[z]/(z^2 + z + 1)");
  CHECK(f4.order() == 4);
  CHECK(f4.format(3) == "z + 1");
  CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), Error);  // z^2 + 1 = (z + 1)^2
}

TEST_CASE("element order") {
  const Field f5 = Field::prime(5);
  CHECK(element_order(f5, 1) == 1);
  CHECK(element_order(f5, 2) == 4);
  const Field f4 = Field::extension(2, first_irreducible(2, 2));
  for (Elem a = 2; a < 4; ++a) CHECK(element_order(f4, a) == 3);
  try {
    element_order(f5, 0);
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroElement);
  }
}

TEST_CASE("field axioms on every pair, fields of order <= 256") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.describe());
    const Elem n = f.order();
    const auto modulus = f.modulus();
    for (Elem a = 0; a < n; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Elem b = 0; b < n; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.sub(f.add(a, b), b) == a);
        if (!f.is_prime_field()) {
          const auto want = oracle::poly_mulmod(f.coefficients(a), f.coefficients(b), modulus, f.characteristic());
          REQUIRE(f.mul(a, b) == f.from_coefficients(want));
        } else {
          REQUIRE(f.mul(a, b) == a * b % n);
        }
      }
    }
  }
}

TEST_CASE("associativity and distributivity on triples") {
  std::mt19937_64 rng(7);
  for (const Field& f : small_fields()) {
    CAPTURE(f.describe());
    const Elem n = f.order();
    auto check = [&](Elem a, Elem b, Elem c) {
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    };
    if (n <= 64 || n == 256) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c) check(a, b, c);
    } else {
      for (int i = 0; i < 100000; ++i) check(rng() % n, rng() % n, rng() % n);
    }
  }
}

TEST_CASE("Ben-Or test agrees with trial division") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned k = 1; ipow(p, k) <= 729; ++k) {
      const std::uint64_t count = ipow(p, k);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint64_t> m(k + 1, 0);
        std::uint64_t x = code;
        for (unsigned i = 0; i < k; ++i) {
          m[i] = x % p;
          x /= p;
        }
        m[k] = 1;
        CAPTURE(p);
        CAPTURE(code);
        REQUIRE(is_irreducible(p, m) == oracle::irreducible_by_trial_division(m, p));
      }
    }
  }
}

TEST_CASE("first irreducible is the first in packed order") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto m = first_irreducible(p, k);
      REQUIRE(m.size() == k + 1);
      CHECK(m[k] == 1);
      CHECK(oracle::irreducible_by_trial_division(m, p));
      std::uint64_t code = 0;
      for (unsigned i = k; i-- > 0;) code = code * p + m[i];
      for (std::uint64_t earlier = 0; earlier < code; ++earlier) {
        std::vector<std::uint64_t> e(k + 1, 0);
        std::uint64_t x = earlier;
        for (unsigned i = 0; i < k; ++i) {
          e[i] = x % p;
          x /= p;
        }
        e[k] = 1;
        CHECK_FALSE(oracle::irreducible_by_trial_division(e, p));
      }
    }
  }
  CHECK(first_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("roots of unity") {
  SUBCASE("p=2 q=3 lives in F_4") {
    const auto r = find_root_of_unity(2, 3);
    CHECK(r.field.degree() == 2);
    CHECK(element_order(r.field, r.omega) == 3);
  }
  SUBCASE("p=5 q=4 gives omega=2 in F_5") {
    const auto r = find_root_of_unity(5, 4);
    CHECK(r.field.degree() == 1);
    CHECK(r.omega == 2);
  }
  SUBCASE("p | q is rejected") {
    try {
      find_root_of_unity(3, 3);
      FAIL("expected NotCoprime");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCoprime);
    }
  }
  SUBCASE("extension cap") {
    try {
      find_root_of_unity(2, 11, 5);  // needs k = 10
      FAIL("expected SearchLimit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SearchLimit);
    }
  }
  SUBCASE("grid p in {2,3,5,7}, q <= 12") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::uint64_t q = 2; q <= 12; ++q) {
        if (gcd(p, q) != 1) continue;
        CAPTURE(p);
        CAPTURE(q);
        const auto r = find_root_of_unity(p, q);
        const unsigned k = r.field.degree();
        CHECK(element_order(r.field, r.omega) == q);
        CHECK((ipow(p, k) - 1) % q == 0);
        for (unsigned j = 1; j < k; ++j) CHECK((ipow(p, j) - 1) % q != 0);
        CHECK(element_order(r.field, r.generator) == r.field.order() - 1);
        CHECK(r.field.modulus() == first_irreducible(p, k));
        for (Elem g = 1; g < r.generator; ++g) CHECK(element_order(r.field, g) < r.field.order() - 1);
      }
    }
  }
}

TEST_CASE("prime factors and gcd") {
  CHECK(prime_factors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
  CHECK(gcd(12, 18) == 6);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
}
