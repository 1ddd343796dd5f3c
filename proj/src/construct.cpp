#include "apolar/construct.hpp"

#include <algorithm>
#include <functional>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

constexpr std::size_t kFallbackLimit = 20000;

Poly mono(int a, int b) { return Poly::monomial(Monomial(a, b)); }
Poly mono(int a, int b, int c) { return Poly::monomial(Monomial(a, b, c)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

HSeq type1_hf(int u, int v, int w) {
  std::vector<int> h{1, 3, 3};
  h.insert(h.end(), static_cast<std::size_t>(u), 3);
  h.insert(h.end(), static_cast<std::size_t>(v), 2);
  h.insert(h.end(), static_cast<std::size_t>(w), 1);
  h.push_back(1);
  return HSeq(std::move(h));
}

// a = x a' + y a'' where a'' collects the pure powers of y.
std::pair<Poly, Poly> split_xy(const Poly& a) {
  Poly ax(2), ay(2);
  for (const auto& [m, c] : a.terms()) {
    if (m.e[0] > 0) {
      ax.add_term(Monomial(m.e[0] - 1, m.e[1]), c);
    } else {
      ay.add_term(Monomial(0, m.e[1] - 1), c);
    }
  }
  return {ax, ay};
}

bool in_m2_contractions(const DualPoly& F, const DualPoly& target) {
  return solve_contraction(F, target, F.degree(), 2).has_value();
}

DualPoly monic_dual(const DualPoly& G) {
  auto terms = G.display_terms();
  if (terms.empty()) return G;
  return G * terms.front().second.inverse();
}

std::optional<DualPoly> realize(const std::vector<int>& exponents, const HSeq& h2, const Field& field,
                                std::vector<std::array<Scalar, 2>>& forms) {
  forms = linear_forms(exponents.size(), field);
  DualPoly F = power_sum(forms, exponents);
  if (apolar_hf(F) == h2) return F;
  return std::nullopt;
}

}  // namespace

Ideal construct_h3le3(int u, int v, int w, const Field& field) {
  if (u < 0 || v < 0 || w < 0) throw PreconditionFailed("u, v, w must be nonnegative");
  const int A = u + v + w + 2, B = u + v + 2, C = u + 2;
  const int s = u + v + w + 3;
  std::vector<Poly> gens;
  DualPoly F(3);
  if (u == 0 && v == 0 && w == 0) {
    gens = {mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2)};
    F = DualPoly::monomial(Monomial(1, 1, 1));
  } else {
    gens = {mono(0, 1, 1) - mono(A, 0, 0), mono(1, 0, 1) - mono(0, B, 0), mono(1, 1, 0) - mono(0, 0, C)};
    F = DualPoly::monomial(Monomial(A + 1, 0, 0)) + DualPoly::monomial(Monomial(0, B + 1, 0)) +
        DualPoly::monomial(Monomial(0, 0, C + 1)) + DualPoly::monomial(Monomial(1, 1, 1));
  }
  for (auto& g : gens) g = g.over(field);
  Ideal I(std::move(gens), s + 1);
  require(I.hilbert_function() == type1_hf(u, v, w),
          "h3<=3 ideal has Hilbert function (" + I.hilbert_function().to_string() + ")");
  require(is_complete_intersection(I), "h3<=3 ideal is not a complete intersection");
  if (u + v + w > 0) require(I.contains(mono(A + 2, 0, 0).over(field)), "x^(A+2) is not in the h3<=3 ideal");
  require(same_ideal(I, annihilator(F.over(field))), "h3<=3 ideal differs from ann(F)");
  return I;
}

std::vector<std::array<Scalar, 2>> linear_forms(std::size_t count, const Field& field) {
  std::vector<std::array<Scalar, 2>> out;
  if (count > 0) out.push_back({field(1), field(0)});
  if (count > 1) out.push_back({field(0), field(1)});
  std::vector<Scalar> used{field(0)};
  for (long long c = 1; out.size() < count; ++c) {
    if (!field.is_rational() && c > static_cast<long long>(field.characteristic())) {
      throw UnrealizableByPowers(field.name() + " has fewer than " + std::to_string(count) + " pairwise independent linear forms");
    }
    for (long long sc : {c, -c}) {
      Scalar slope = field(sc);
      if (out.size() == count || std::find(used.begin(), used.end(), slope) != used.end()) continue;
      used.push_back(slope);
      out.push_back({field(1), slope});
    }
  }
  return out;
}

DualPoly power_sum(const std::vector<std::array<Scalar, 2>>& forms, const std::vector<int>& exponents) {
  if (forms.size() != exponents.size()) throw PreconditionFailed("one linear form per exponent");
  DualPoly F(2);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const int e = exponents[i];
    const auto& [a, b] = forms[i];
    for (int j = 0; j <= e; ++j) {
      Scalar c = 1;
      for (int k = 0; k < e - j; ++k) c *= a;
      for (int k = 0; k < j; ++k) c *= b;
      if (!c.is_zero()) F.add_term(Monomial(e - j, j), c);
    }
  }
  return F;
}

PowerSumForm codim2_dual_from_h(const HSeq& h2, const Field& field) {
  std::vector<int> ends = codim2_right_ends(h2);
  PowerSumForm out;
  for (std::size_t i = 0; i < ends.size(); ++i) out.exponents.push_back(ends[i] + static_cast<int>(i));
  if (auto F = realize(out.exponents, h2, field, out.forms)) {
    out.form = *F;
    return out;
  }

  // Exhaustive search over non-increasing exponents with the right total length.
  const int t = static_cast<int>(ends.size());
  const int s = h2.socle_degree();
  std::vector<int> e;
  std::size_t tried = 0;
  std::function<bool(int)> rec = [&](int budget) {
    int i = static_cast<int>(e.size());
    if (i == t) {
      if (budget != 0 || ++tried > kFallbackLimit) return false;
      if (auto F = realize(e, h2, field, out.forms)) {
        out.exponents = e;
        out.form = *F;
        return true;
      }
      return false;
    }
    int hi = i == 0 ? s : e.back();
    int lo = 2 * i;
    for (int x = hi; x >= lo; --x) {
      int len = x + 1 - 2 * i;
      if (len > budget) continue;
      e.push_back(x);
      if (rec(budget - len)) return true;
      e.pop_back();
    }
    return false;
  };
  if (rec(h2.sum())) return out;
  throw UnrealizableByPowers("no sum of powers of linear forms has Hilbert function (" + h2.to_string() + ")");
}

DualPoly find_G(const DualPoly& F, const HSeq& target, int k) {
  if (F.nvars() != 2) throw ArityMismatch("find_G works in two variables");
  const HSeq hF = apolar_hf(F);
  DualSubmodule span({F});
  std::optional<DualPoly> G;
  if (hF.max() == target.max()) {
    Ideal annF = annihilator(F);
    const auto& fg = annF.generators();
    if (fg.size() != 2) throw PreconditionFailed("ann(F) is not a complete intersection");
    const Poly& f = fg[0];
    const Poly& g = fg[1];
    std::vector<Poly> gens{f, mono(1, 0) * g, mono(0, 1) * g};
    MonomialIndex unknowns = dual_column_index(2, k);
    std::vector<SparseVec> images;
    for (const auto& a : unknowns.monomials()) {
      DualPoly Xa = DualPoly::monomial(a);
      SparseVec img;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        for (const auto& [i, c] : to_sparse(contract(gens[j], Xa), unknowns)) img.emplace_back(i + j * unknowns.size(), c);
      }
      images.push_back(std::move(img));
    }
    LinearMap map(unknowns.size() * gens.size(), images);
    RowSpace perp(unknowns.size());
    for (const auto& v : map.kernel()) perp.insert(v);
    for (const auto& row : perp.reduced_basis()) {
      DualPoly cand = from_sparse(row, unknowns, 2);
      if (!span.contains(cand)) {
        G = span.reduce(cand);
        break;
      }
    }
  } else {
    MonomialIndex index = dual_column_index(2, k);
    for (const auto& m : index.monomials()) {
      if (m.degree() != k) continue;
      DualPoly cand = DualPoly::monomial(m);
      if (!span.contains(cand)) {
        G = span.reduce(cand);
        break;
      }
    }
  }
  require(G.has_value() && !G->is_zero(), "no G outside <F> found");
  DualPoly out = monic_dual(*G);
  require(out.degree() == k, "G has degree " + std::to_string(out.degree()) + ", expected " + std::to_string(k));
  require(in_m2_contractions(F, contract(mono(1, 0), out)) && in_m2_contractions(F, contract(mono(0, 1), out)),
          "x o G or y o G is not in m^2 o F");
  require(annihilator(std::vector<DualPoly>{F, out}).hilbert_function() == target,
          "S/ann(F,G) does not have Hilbert function (" + target.to_string() + ")");
  return out;
}

NormalizedG normalize_G(const DualPoly& F, const DualPoly& G) {
  const Poly x = mono(1, 0), y = mono(0, 1);
  if (!in_m2_contractions(F, contract(x, G))) throw PreconditionFailed("x o G is not in m^2 o F");
  auto a2 = solve_contraction(F, contract(y, G), F.degree(), 2);
  if (!a2) throw PreconditionFailed("y o G is not in m^2 o F");
  auto [a2p, a2pp] = split_xy(*a2);
  NormalizedG out;
  out.G = G - contract(a2pp, F);
  out.a2p = a2p;
  require(contract(y, out.G) == contract(x * a2p, F), "normalized G fails y o G = (x a2') o F");
  return out;
}

Poly SyzygyData::d12p() const { return split_xy(d12).first; }
Poly SyzygyData::d12pp() const { return split_xy(d12).second; }
Poly SyzygyData::U1() const { return (d12p() + d21) * Scalar::rational(-1, 2); }
Poly SyzygyData::U2() const { return -d12pp(); }
Poly SyzygyData::V1() const { return -a2p; }
Poly SyzygyData::V2() const { return (d12p() - d21) * Scalar::rational(1, 2); }
Poly SyzygyData::U() const { return mono(1, 0) * U1() + mono(0, 1) * U2(); }
Poly SyzygyData::V() const { return mono(1, 0) * V1() + mono(0, 1) * V2(); }
Poly SyzygyData::W() const { return U2() * V1() + V2() * V2() - d11; }

SyzygyData syzygy_data(const DualPoly& F, const DualPoly& G) {
  const Poly x = mono(1, 0), y = mono(0, 1);
  SyzygyData sd;
  sd.F = F;
  sd.G = G;
  sd.d21 = Poly(2);
  auto a2p = solve_contraction(contract(x, F), contract(y, G), F.degree(), 1);
  if (!a2p) throw PreconditionFailed("y o G is not of the form (x a2') o F");
  sd.a2p = *a2p;
  auto d12 = solve_contraction(F, contract(x, G), F.degree(), 2);
  if (!d12) throw PreconditionFailed("x o G is not in m^2 o F");
  sd.d12 = *d12;

  // (e, 0) = y (d12, -x) + x (-x a2', y) lies in ann(F) x 0; the third column
  // (d11, 0) must complete e to a generating set of ann(F).
  const Poly e = y * sd.d12 - x * x * sd.a2p;
  Ideal annF = annihilator(F);
  const int N = annF.truncation_bound();
  MonomialIndex cols(monomials_up_to(2, N));
  RowSpace mI = ideal_span(annF.generators(), cols, N, true);
  bool found = false;
  for (const auto& cand : annF.generators()) {
    RowSpace sp = mI;
    Poly et = e.truncated(N), ct = cand.truncated(N);
    if (sp.contains(to_sparse(et, cols))) break;
    sp.insert(to_sparse(et, cols));
    if (sp.contains(to_sparse(ct, cols))) continue;
    sd.d11 = cand;
    found = true;
    break;
  }
  require(found, "relation module does not reduce to the expected template");
  require(contract(sd.d11, F).is_zero(), "d11 does not annihilate F");
  require(contract(sd.d12, F) == contract(x, G), "column (d12, -x) is not a relation");
  require(contract(x * sd.a2p, F) == contract(y, G), "column (-x a2', y) is not a relation");
  require(sd.d12.order() >= 2 && sd.d11.order() >= 2 && sd.a2p.order() >= 1, "syzygy entries have too small order");
  return sd;
}

Ideal assemble_ci(const SyzygyData& sd) {
  for (const auto& [m, c] : sd.F.terms()) {
    if (!c.is_rational() && c.modulus() == 2) throw FieldError("the construction divides by 2");
  }
  const Poly U2v = sd.U(), V2v = sd.V(), W2v = sd.W();
  require(U2v.order() >= 2 && V2v.order() >= 2 && W2v.order() >= 1, "U, V must lie in m^2 and W in m");
  const Poly U = to_three_vars(U2v), V = to_three_vars(V2v), W = to_three_vars(W2v);
  const Poly U1 = to_three_vars(sd.U1()), U2 = to_three_vars(sd.U2());
  const Poly V1 = to_three_vars(sd.V1()), V2 = to_three_vars(sd.V2());
  const Poly x = mono(1, 0, 0), y = mono(0, 1, 0), z = mono(0, 0, 1);
  const Poly f = x * z - U, g = y * z - V, p = z * z - W;

  const Poly j1 = -(y * U) + x * V;
  const Poly j2 = -(U * V1) - V * V2 + y * W;
  const Poly j3 = -(U * U1) - V * U2 + x * W;
  require(j1 == y * f - x * g, "identity y f - x g fails");
  require(j2 == V1 * f + (z + V2) * g - y * p, "identity V1 f + (z + V2) g - y p fails");
  require(j3 == (z + U1) * f + U2 * g - x * p, "identity (z + U1) f + U2 g - x p fails");

  const int hint = std::max(sd.F.degree(), sd.G.degree()) + 1;
  Ideal I({f, g, p}, hint);
  require(is_complete_intersection(I), "assembled ideal is not a complete intersection");
  Ideal J = annihilator(std::vector<DualPoly>{sd.F, sd.G});
  require(same_ideal(section_with_S(I), J), "I n S differs from ann_S(F, G)");
  Ideal minors({to_two_vars(j1), to_two_vars(j2), to_two_vars(j3)}, J.truncation_bound());
  require(same_ideal(minors, J), "2x2 minors do not generate ann_S(F, G)");
  return I;
}

ConstructionTrace construct_ci_traced(const HSeq& h, const ConstructOptions& options) {
  ConstructionTrace tr;
  tr.h = h;
  tr.classification = classify_133(h);
  const auto& c = tr.classification;
  if (!c.admissible()) throw Rejected(to_string(c.verdict), c.reason);
  const Field& field = options.field;

  if (c.verdict == Verdict::TypeI) {
    if (options.dual_F || options.dual_G) throw PreconditionFailed("F and G overrides apply to (1,3,3,4) sequences only");
    tr.ideal.emplace(construct_h3le3(c.uvw[0], c.uvw[1], c.uvw[2], field));
    tr.checks.emplace_back("explicit ideal equals ann(F)");
  } else {
    tr.h1 = h.with(1, 2);
    tr.h2 = tr.h1.with(static_cast<std::size_t>(c.peak), c.d - 1);
    if (options.dual_F) {
      tr.F = options.dual_F->over(field);
      if (tr.F.nvars() != 2) throw ArityMismatch("F must be a dual polynomial in X, Y");
      HSeq got = apolar_hf(tr.F);
      if (!(got == tr.h2)) {
        throw PreconditionFailed("F has apolar Hilbert function (" + got.to_string() + "), expected (" + tr.h2.to_string() + ")");
      }
    } else {
      tr.power_sum = codim2_dual_from_h(tr.h2, field);
      tr.F = tr.power_sum->form;
    }
    tr.checks.emplace_back("apolar HF of F = h''");
    if (options.dual_G) {
      tr.G = options.dual_G->over(field);
      if (tr.G.nvars() != 2) throw ArityMismatch("G must be a dual polynomial in X, Y");
      HSeq got = annihilator(std::vector<DualPoly>{tr.F, tr.G}).hilbert_function();
      if (!(got == tr.h1)) {
        throw PreconditionFailed("S/ann(F,G) has Hilbert function (" + got.to_string() + "), expected (" + tr.h1.to_string() + ")");
      }
    } else {
      tr.G = find_G(tr.F, tr.h1, c.peak);
    }
    tr.checks.emplace_back("HF of S/ann(F,G) = h'");
    NormalizedG ng = normalize_G(tr.F, tr.G);
    tr.G_normalized = ng.G;
    tr.checks.emplace_back("y o G' = (x a2') o F");
    tr.syzygy = syzygy_data(tr.F, ng.G);
    tr.checks.emplace_back("syzygy columns are relations");
    tr.ideal.emplace(assemble_ci(*tr.syzygy));
    tr.checks.emplace_back("minor identities");
    tr.checks.emplace_back("I n S = ann_S(F, G')");
  }
  const Ideal& I = *tr.ideal;
  require(I.hilbert_function() == h, "constructed ideal has Hilbert function (" + I.hilbert_function().to_string() + ")");
  tr.checks.emplace_back("HF = h");
  require(minimal_generator_count(I) == 3, "constructed ideal does not have 3 minimal generators");
  tr.checks.emplace_back("3 minimal generators");
  require(ArtinQuotient(I).socle_dimension() == 1, "constructed quotient has socle dimension other than 1");
  tr.checks.emplace_back("socle dimension 1");
  return tr;
}

Ideal construct_ci(const HSeq& h, const ConstructOptions& options) { return *construct_ci_traced(h, options).ideal; }

}  // namespace apolar
