#include "immunity/immunity.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "immunity/error.hpp"
#include "immunity/linalg.hpp"

namespace imm {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::General: return "general";
    case Method::Symmetric: return "symmetric";
    case Method::Formula: return "formula";
    case Method::Composite: return "composite";
  }
  return "general";
}

namespace {

void check_size(const BooleanFunction& f, std::uint64_t p) {
  if (f.arity() > kMaxImmunityVariables) {
    throw Error(ErrorKind::TooLarge, "immunity supports n <= " + std::to_string(kMaxImmunityVariables));
  }
  if (p >= 65536) throw Error(ErrorKind::TooLarge, "immunity supports p < 65536");
}

struct Search {
  int degree;
  Mask leading;
  std::vector<Mask> accepted;
  std::vector<Elem> coeffs;
};

// Columns are monomials in graded-lex order, rows the zeros of f.
Search first_dependency(const Field& field, const std::vector<Mask>& zeros, int n, bool track) {
  IncrementalColumnBasis basis(field, zeros.size(), track);
  Search s{0, 0, {}, {}};
  std::vector<std::size_t> ones;
  ones.reserve(zeros.size());
  for (int d = 0; d <= n; ++d) {
    for (Mask m : monomials_of_degree(n, d)) {
      ones.clear();
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        if ((zeros[i] & m) == m) ones.push_back(i);
      }
      auto dep = basis.add_indicator_column(ones);
      if (dep) {
        s.degree = d;
        s.leading = m;
        s.coeffs = std::move(*dep);
        return s;
      }
      if (track) s.accepted.push_back(m);
    }
  }
  throw Error(ErrorKind::AssertionFailure, "no dependency among all 2^n monomial columns");
}

}  // namespace

ImmunityReport immunity(const BooleanFunction& f, std::uint64_t p) {
  check_size(f, p);
  const Field field = Field::prime(p);
  const int n = f.arity();
  ImmunityReport r;
  r.method = Method::General;
  if (f.is_zero()) {
    r.checked = true;
    return r;
  }
  const auto zeros = f.zero_set();
  if (zeros.empty()) {
    r.degree = 0;
    r.witness = MultilinearPoly::constant(field, n, 1);
    r.checked = true;
    return r;
  }
  const Search s = first_dependency(field, zeros, n, true);
  MultilinearPoly::Terms terms;
  terms[s.leading] = 1;
  for (std::size_t j = 0; j < s.accepted.size(); ++j) {
    if (s.coeffs[j]) terms[s.accepted[j]] = field.neg(s.coeffs[j]);
  }
  MultilinearPoly g(field, n, std::move(terms));
  r.degree = s.degree;
  r.checked = g.degree() == s.degree && ideal_member(g, f);
  r.witness = std::move(g);
  return r;
}

std::optional<int> immunity_degree(const BooleanFunction& f, std::uint64_t p) {
  check_size(f, p);
  if (f.is_zero()) return std::nullopt;
  const auto zeros = f.zero_set();
  if (zeros.empty()) return 0;
  return first_dependency(Field::prime(p), zeros, f.arity(), false).degree;
}

int two_sided_immunity(const BooleanFunction& f, std::uint64_t p) {
  if (f.is_constant()) throw Error(ErrorKind::ConstantFunction, "two-sided immunity of a constant function");
  return std::min(*immunity_degree(f, p), *immunity_degree(f.complement(), p));
}

WeakModResult weak_mod_m_degree(const BooleanFunction& f, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::BadRange, "modulus must be >= 2");
  WeakModResult best;
  for (auto p : prime_factors(m)) {
    const auto d = immunity_degree(f, p);
    if (!best.prime) best.prime = p;
    if (d && (!best.degree || *d < *best.degree)) {
      best.degree = d;
      best.prime = p;
    }
  }
  return best;
}

std::optional<int> brute_force_weak_mod_m(const BooleanFunction& f, std::uint64_t m, int d_max) {
  if (m < 2) throw Error(ErrorKind::BadRange, "modulus must be >= 2");
  const int n = f.arity();
  const auto zeros = f.zero_set();
  for (int d = 0; d <= std::min(d_max, n); ++d) {
    // Monomials of degree <= d in increasing mask order: every proper subset
    // of a monomial comes before it.
    std::vector<Mask> monos;
    std::vector<int> index(std::size_t{1} << n, -1);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (popcount(s) <= d) {
        index[s] = static_cast<int>(monos.size());
        monos.push_back(s);
      }
    }
    const std::size_t k = monos.size();
    std::vector<char> forced(k, 0);
    std::vector<std::vector<int>> checks(k);  // high-weight zeros completed at index i
    std::vector<std::vector<int>> subsets;    // per high-weight zero
    for (Mask z : zeros) {
      if (popcount(z) <= d) {
        forced[static_cast<std::size_t>(index[z])] = 1;
        continue;
      }
      std::vector<int> sub;
      for (Mask s = z;; s = (s - 1) & z) {
        if (index[s] >= 0) sub.push_back(index[s]);
        if (s == 0) break;
      }
      const int last = *std::max_element(sub.begin(), sub.end());
      checks[static_cast<std::size_t>(last)].push_back(static_cast<int>(subsets.size()));
      subsets.push_back(std::move(sub));
    }
    const auto free = std::count(forced.begin(), forced.end(), 0);
    std::uint64_t space = 1;
    for (long i = 0; i < free; ++i) {
      if (space > kBruteForceBudget / m) {
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "Z_" + std::to_string(m) + " search at degree " + std::to_string(d) + " exceeds 10^7 vectors");
      }
      space *= m;
    }
    std::vector<std::uint64_t> c(k, 0);
    auto sum_subsets = [&](Mask z) {
      std::uint64_t acc = 0;
      for (Mask s = (z - 1) & z;; s = (s - 1) & z) {  // proper subsets of z
        acc += c[static_cast<std::size_t>(index[s])];
        if (s == 0) break;
      }
      return acc % m;
    };
    std::function<bool(std::size_t, bool)> dfs = [&](std::size_t i, bool nonzero) -> bool {
      if (i == k) return nonzero;
      const auto try_value = [&](std::uint64_t v) {
        c[i] = v;
        for (int h : checks[i]) {
          std::uint64_t acc = 0;
          for (int j : subsets[static_cast<std::size_t>(h)]) acc += c[static_cast<std::size_t>(j)];
          if (acc % m) return false;
        }
        return dfs(i + 1, nonzero || (!forced[i] && v != 0));
      };
      if (forced[i]) {
        const Mask z = monos[i];
        const std::uint64_t below = z ? sum_subsets(z) : 0;
        return try_value((m - below) % m);
      }
      for (std::uint64_t v = 0; v < m; ++v) {
        if (try_value(v)) return true;
      }
      return false;
    };
    if (dfs(0, false)) return d;
  }
  return std::nullopt;
}

ModBoundsReport verify_mod_bounds(int n, int q, std::uint64_t p) {
  if (n < 1 || n > 14) throw Error(ErrorKind::TooLarge, "verify_mod_bounds supports 1 <= n <= 14");
  if (q < 2) throw Error(ErrorKind::BadRange, "q must be >= 2");
  if (gcd(p, static_cast<std::uint64_t>(q)) != 1) throw Error(ErrorKind::NotCoprime, "p divides q");
  ModBoundsReport r;
  r.n = n;
  r.q = q;
  r.p = p;
  const BooleanFunction chi = mod_indicator(n, q);
  r.chi = *immunity_degree(chi, p);
  r.not_chi = *immunity_degree(chi.complement(), p);
  r.lower = (n + 1) / 2;
  r.not_chi_formula = (n + q - 1) / q;
  r.tight_case = n % (2 * q) == 0;
  r.gap = r.chi - r.lower;
  const std::string cell = " at n=" + std::to_string(n) + " q=" + std::to_string(q) + " p=" + std::to_string(p);
  if (r.chi < r.lower) {
    throw Error(ErrorKind::AssertionFailure, "MOD_q lower bound violated" + cell);
  }
  if (r.tight_case && r.chi != n / 2) {
    throw Error(ErrorKind::AssertionFailure, "MOD_q tightness violated" + cell);
  }
  if (r.not_chi != r.not_chi_formula) {
    throw Error(ErrorKind::AssertionFailure, "not-MOD_q exact immunity violated" + cell);
  }
  return r;
}

std::string report_to_json(const ImmunityReport& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree ? nlohmann::ordered_json(*r.degree) : nlohmann::ordered_json(nullptr);
  j["method"] = std::string(to_string(r.method));
  auto w = nlohmann::ordered_json::array();
  if (r.witness) {
    std::vector<std::pair<Mask, Elem>> terms(r.witness->terms().begin(), r.witness->terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
    for (const auto& [mask, coeff] : terms) w.push_back({{"mask", mask}, {"coeff", coeff}});
  }
  j["witness"] = std::move(w);
  j["checked"] = r.checked;
  return j.dump();
}

}  // namespace imm
