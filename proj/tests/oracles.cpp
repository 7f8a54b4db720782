#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::size_t rank_by_span(const Mat& rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].size();
  std::set<Vec> span;
  std::vector<std::uint64_t> coef(r, 0);
  for (;;) {
    Vec v(c, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) v[j] = (v[j] + coef[i] * (rows[i][j] % p)) % p;
    }
    span.insert(v);
    std::size_t k = 0;
    while (k < r && coef[k] == p - 1) coef[k++] = 0;
    if (k == r) break;
    ++coef[k];
  }
  std::size_t rank = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++rank;
  return rank;
}

std::uint64_t det_leibniz(const Mat& a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * (a[i][perm[i]] % p) % p;
    total = inversions % 2 ? (total + p - term) % p : (total + term) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t binomial_exact(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? 0 : t[n][k];
}

std::optional<int> immunity_by_enumeration(int n, const std::vector<std::uint8_t>& table, std::uint64_t p) {
  if (std::all_of(table.begin(), table.end(), [](auto v) { return v == 0; })) return std::nullopt;
  for (int d = 0; d <= n; ++d) {
    std::vector<unsigned> monos;
    for (unsigned s = 0; s < (1u << n); ++s) {
      if (__builtin_popcount(s) <= d) monos.push_back(s);
    }
    std::vector<std::uint64_t> c(monos.size(), 0);
    for (;;) {
      std::size_t k = 0;
      while (k < c.size() && c[k] == p - 1) c[k++] = 0;
      if (k == c.size()) break;
      ++c[k];
      bool vanishes = true;
      for (unsigned x = 0; x < table.size() && vanishes; ++x) {
        if (table[x]) continue;
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < monos.size(); ++i) {
          if ((x & monos[i]) == monos[i]) v += c[i];
        }
        vanishes = v % p == 0;
      }
      if (vanishes) return d;
    }
  }
  return std::nullopt;
}

Vec poly_mulmod(const Vec& a, const Vec& b, const Vec& modulus, std::uint64_t p) {
  const std::size_t k = modulus.size() - 1;
  Vec prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t i = prod.size(); i-- > k;) {
    const std::uint64_t lead = prod[i];
    if (!lead) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      prod[i - k + j] = (prod[i - k + j] + (p - lead) * modulus[j]) % p;
    }
  }
  prod.resize(k);
  return prod;
}

namespace {

bool divides(const Vec& divisor, Vec dividend, std::uint64_t p) {
  const std::size_t m = divisor.size() - 1;  // divisor is monic
  for (std::size_t i = dividend.size(); i-- > m;) {
    const std::uint64_t lead = dividend[i];
    if (!lead) continue;
    for (std::size_t j = 0; j <= m; ++j) dividend[i - m + j] = (dividend[i - m + j] + (p - lead) * divisor[j]) % p;
  }
  return std::all_of(dividend.begin(), dividend.begin() + static_cast<std::ptrdiff_t>(m), [](auto v) { return v == 0; });
}

}  // namespace

bool irreducible_by_trial_division(const Vec& monic, std::uint64_t p) {
  const std::size_t k = monic.size() - 1;
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec cand(deg + 1, 0);
      std::uint64_t x = code;
      for (std::size_t i = 0; i < deg; ++i) {
        cand[i] = x % p;
        x /= p;
      }
      cand[deg] = 1;
      if (divides(cand, monic, p)) return false;
    }
  }
  return true;
}

}  // namespace oracle
