#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "apolar/apolar.hpp"
#include "apolar/dual.hpp"
#include "apolar/localring.hpp"
#include "apolar/sequences.hpp"
#include "apolar/symdec.hpp"
#include "oracles.hpp"

namespace support {

using namespace apolar;

inline Poly P(const char* text, int nvars = 3) { return parse_poly(text, nvars); }
inline DualPoly D(const char* text, int nvars = 3) { return parse_dual(text, nvars); }
inline std::vector<Poly> gens(const char* text, int nvars = 3) { return parse_poly_list(text, nvars); }
inline Ideal ideal(const char* text, int nvars = 3) { return Ideal(parse_poly_list(text, nvars)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Scalar coefficient() {
    int c = uniform(1, 3);
    return Scalar(uniform(0, 1) ? c : -c);
  }
  Monomial monomial(int nvars, int lo, int hi) {
    int d = uniform(lo, hi);
    int a = uniform(0, d);
    int b = uniform(0, d - a);
    if (nvars == 2) return Monomial(a, d - a);
    int perm = uniform(0, 2);
    if (perm == 0) return Monomial(a, b, d - a - b);
    if (perm == 1) return Monomial(d - a - b, a, b);
    return Monomial(b, d - a - b, a);
  }
  template <bool Dual>
  PolyT<Dual> poly(int nvars, int terms, int lo, int hi) {
    PolyT<Dual> f(nvars);
    for (int t = 0; t < terms; ++t) f.add_term(monomial(nvars, lo, hi), coefficient());
    return f;
  }
  Poly ring(int nvars, int terms, int lo, int hi) { return poly<false>(nvars, terms, lo, hi); }
  DualPoly dual(int nvars, int terms, int lo, int hi) { return poly<true>(nvars, terms, lo, hi); }

 private:
  std::mt19937_64 eng_;
};

// (a X + b Y + c Z)^[e] = sum over |alpha| = e of a^alpha0 b^alpha1 c^alpha2 X^alpha.
inline DualPoly divided_power(const std::array<Scalar, 3>& l, int e) {
  DualPoly out(3);
  for (const auto& m : monomials_of_degree(3, e)) {
    Scalar c(1);
    for (int t = 0; t < 3; ++t)
      for (int k = 0; k < m.e[static_cast<std::size_t>(t)]; ++k) c *= l[static_cast<std::size_t>(t)];
    out.add_term(m, c);
  }
  return out;
}

// Dual generators from several families that tend to have apolar Hilbert
// function starting (1,3,3).
inline DualPoly random_133_candidate(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: {
      DualPoly F(3);
      for (int k = 0; k < 3; ++k) {
        std::array<Scalar, 3> l{Scalar(rng.uniform(-2, 2)), Scalar(rng.uniform(-2, 2)), Scalar(rng.uniform(-2, 2))};
        l[static_cast<std::size_t>(k)] = Scalar(rng.uniform(1, 2));
        F += divided_power(l, rng.uniform(2, 7));
      }
      if (rng.uniform(0, 1)) F += rng.dual(3, 2, 1, 3);
      return F;
    }
    case 1:
      return to_three_vars(rng.dual(2, rng.uniform(2, 5), 3, 7)) + DualPoly::monomial(Monomial(0, 0, 2));
    case 2:
      return rng.dual(3, rng.uniform(3, 6), 3, 5);
    default: {
      int c = rng.uniform(2, 4);
      int b = rng.uniform(c, 6);
      int a = rng.uniform(b, 7);
      DualPoly F = DualPoly::monomial(Monomial(a, 0, 0), rng.coefficient()) +
                   DualPoly::monomial(Monomial(0, b, 0), rng.coefficient()) +
                   DualPoly::monomial(Monomial(0, 0, c), rng.coefficient()) +
                   DualPoly::monomial(Monomial(1, 1, 1), rng.coefficient());
      if (rng.uniform(0, 1)) F += rng.dual(3, 1, 2, 3);
      return F;
    }
  }
}

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Every decomposition computed through here is checked for symmetry of each
// row and for adding up to the Hilbert function.
struct DecompositionAudit {
  PropertyResult result;

  SymDecomp operator()(const Ideal& I) {
    SymDecomp D = symmetric_decomposition(I);
    ++result.cases;
    if (!D.is_symmetric()) result.fail("asymmetric row in " + D.to_string());
    if (D.total() != I.hilbert_function()) result.fail("rows of " + D.to_string() + " do not add up to h");
    return D;
  }
};

inline DecompositionAudit& audit() {
  static DecompositionAudit a;
  return a;
}

inline PropertyResult module_axiom(int n, std::uint64_t seed = 1) {
  Rng rng(seed);
  PropertyResult r;
  for (int k = 0; k < n; ++k) {
    Poly f = rng.ring(3, rng.uniform(1, 3), 0, 3);
    Poly g = rng.ring(3, rng.uniform(1, 3), 0, 3);
    DualPoly F = rng.dual(3, rng.uniform(1, 5), 0, 7);
    ++r.cases;
    DualPoly lhs = contract(f * g, F);
    DualPoly rhs = contract(f, contract(g, F));
    if (lhs != rhs) r.fail("(fg) o F != f o (g o F) for f = " + f.to_string() + ", g = " + g.to_string());
    if (lhs != oracle::contract(oracle::multiply(f, g), F)) r.fail("contraction disagrees with the oracle");
  }
  return r;
}

inline PropertyResult matlis(int n, std::uint64_t seed = 2) {
  Rng rng(seed);
  PropertyResult r;
  for (int k = 0; k < n; ++k) {
    DualPoly F = k % 2 ? random_133_candidate(rng) : rng.dual(3, rng.uniform(1, 4), 1, 5);
    if (F.is_zero()) {
      --k;
      continue;
    }
    ++r.cases;
    HSeq h = apolar_hf(F);
    Ideal I = annihilator(F);
    if (h.sum() != I.colength()) r.fail("dim R/ann(F) != sum of apolar HF for F = " + F.to_string());
    if (h != oracle::apolar_hf(F)) r.fail("apolar HF disagrees with the oracle for F = " + F.to_string());
    if (I.hilbert_function() != h) r.fail("HF of ann(F) != apolar HF for F = " + F.to_string());
  }
  return r;
}

inline PropertyResult grauert_contract(int n, std::uint64_t seed = 3) {
  Rng rng(seed);
  MonomialOrder ord;
  PropertyResult r;
  for (int k = 0; k < n; ++k) {
    int N = rng.uniform(3, 7);
    Poly f = rng.ring(3, rng.uniform(1, 6), 0, N);
    if (f.is_zero()) {
      --k;
      continue;
    }
    std::vector<Poly> divisors;
    int count = rng.uniform(1, 3);
    while (static_cast<int>(divisors.size()) < count) {
      Poly g = rng.ring(3, rng.uniform(1, 3), 1, 3);
      if (!g.is_zero()) divisors.push_back(g);
    }
    ++r.cases;
    Division d = grauert_divide(f, divisors, ord, N);
    Poly rest = f - d.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j) rest -= oracle::multiply(d.quotients[j], divisors[j]);
    if (!rest.truncated(N).is_zero()) r.fail("f != sum q_j f_j + r below degree N for f = " + f.to_string());
    for (const auto& [m, c] : d.remainder.terms())
      for (const auto& g : divisors)
        if (leading_monomial_local(g, ord).divides(m)) r.fail("remainder term divisible by a leading term");
    Monomial lf = leading_monomial_local(f, ord);
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if (d.quotients[j].is_zero()) continue;
      Monomial lq = leading_monomial_local(oracle::multiply(d.quotients[j], divisors[j]), ord);
      if (ord.compare_local(lq, lf) > 0) r.fail("LT(q_j f_j) exceeds LT(f) for f = " + f.to_string());
    }
  }
  return r;
}

inline PropertyResult macaulay_vs_lex(int max_c = 12, int max_i = 8) {
  PropertyResult r;
  for (int i = 1; i <= max_i; ++i)
    for (int c = 1; c <= max_c; ++c) {
      ++r.cases;
      long expect = oracle::lex_segment_growth(c, i);
      long got = macaulay_bound(c, i);
      if (got != expect)
        r.fail("macaulay_bound(" + std::to_string(c) + ", " + std::to_string(i) + ") = " + std::to_string(got) +
               ", lex segment gives " + std::to_string(expect));
    }
  return r;
}

inline PropertyResult gorenstein_never_rejected(int n, std::uint64_t seed = 4) {
  Rng rng(seed);
  PropertyResult r;
  for (int attempts = 0; r.cases < n && attempts < 200 * n; ++attempts) {
    DualPoly F = random_133_candidate(rng);
    if (F.is_zero()) continue;
    HSeq h = apolar_hf(F);
    if (!h.starts_133()) continue;
    ++r.cases;
    Verdict v = classify_133(h).verdict;
    if (v == Verdict::NotGorenstein || v == Verdict::NotOSequence)
      r.fail(h.to_string() + " from F = " + F.to_string() + " classified " + to_string(v));
  }
  if (r.cases < n) r.fail("only " + std::to_string(r.cases) + " samples with h starting (1,3,3)");
  return r;
}

}  // namespace support
