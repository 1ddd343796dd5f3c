#include "apolar/apolar.hpp"

#include <algorithm>
#include <array>

namespace apolar {

namespace {

MonomialIndex ring_columns(int nvars, int max_degree) {
  MonomialOrder ord;
  auto mons = monomials_up_to(nvars, max_degree);
  std::stable_sort(mons.begin(), mons.end(),
                   [&](const Monomial& a, const Monomial& b) { return ord.compare_local(a, b) > 0; });
  return MonomialIndex(std::move(mons));
}

void append_block(SparseVec& out, const SparseVec& block, std::size_t offset) {
  for (const auto& [i, c] : block) out.emplace_back(i + offset, c);
}

// Coordinates of I*_2 spanned by the quadratic initial forms of the standard basis.
std::vector<Poly> quadratic_initial_forms(const Ideal& I) {
  std::vector<Poly> out;
  for (const auto& g : I.standard_basis()) {
    if (g.order() == 2) out.push_back(initial_form(g));
  }
  return out;
}

bool has_quadratic_shape(const Ideal& I) {
  auto forms = quadratic_initial_forms(I);
  if (forms.size() != 3) return false;
  for (const auto& q : forms) {
    for (const auto& [m, c] : q.terms()) {
      if (m.e[2] == 0) return false;
    }
  }
  return true;
}

// Linear images of x, y, z that move the common linear factor of I*_2 to z.
std::optional<std::vector<Poly>> saturating_change(const Ideal& I) {
  auto forms = quadratic_initial_forms(I);
  if (forms.size() != 3) return std::nullopt;
  MonomialIndex quad(monomials_of_degree(3, 2));
  RowSpace space(quad.size());
  for (const auto& q : forms) space.insert(to_sparse(q, quad));

  // l = a x + b y + c z with l * v in I*_2 for v = x, y, z.
  Matrix conditions(3 * quad.size(), 3);
  for (int v = 0; v < 3; ++v) {
    for (int w = 0; w < 3; ++w) {
      Monomial m = Monomial::variable(3, v) * Monomial::variable(3, w);
      SparseVec r = space.reduce({{static_cast<std::size_t>(quad.find(m)), Scalar(1)}});
      for (const auto& [k, c] : r) conditions(static_cast<std::size_t>(v) * quad.size() + k, static_cast<std::size_t>(w)) = c;
    }
  }
  auto kernel = kernel_basis(conditions);
  if (kernel.empty()) return std::nullopt;
  const auto& l = kernel.front();

  static constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& pair : kPairs) {
    // Rows: new x, new y, new z as combinations of the old variables.
    Matrix a(3, 6);
    a(0, static_cast<std::size_t>(pair[0])) = 1;
    a(1, static_cast<std::size_t>(pair[1])) = 1;
    for (std::size_t k = 0; k < 3; ++k) a(2, k) = l[k];
    for (std::size_t k = 0; k < 3; ++k) a(k, 3 + k) = 1;
    Rref r = rref(a);
    if (r.pivots.size() < 3 || r.pivots[2] != 2) continue;
    // Old variable k = sum_j inv(k, j) * new_j.
    std::vector<Poly> images;
    for (std::size_t k = 0; k < 3; ++k) {
      Poly img(3);
      for (std::size_t j = 0; j < 3; ++j) img.add_term(Monomial::variable(3, static_cast<int>(j)), r.reduced(k, 3 + j));
      images.push_back(std::move(img));
    }
    return images;
  }
  return std::nullopt;
}

}  // namespace

Ideal annihilator(const std::vector<DualPoly>& gens) {
  std::vector<DualPoly> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw PreconditionFailed("annihilator of the zero submodule");
  const int nvars = nonzero.front().nvars();
  int s = 0;
  for (const auto& g : nonzero) {
    if (g.nvars() != nvars) throw ArityMismatch("dual generators over different rings");
    s = std::max(s, g.degree());
  }
  MonomialIndex rows = dual_column_index(nvars, s);
  MonomialIndex cols = ring_columns(nvars, s);
  std::vector<SparseVec> images;
  images.reserve(cols.size());
  for (const auto& mu : cols.monomials()) {
    SparseVec img;
    for (std::size_t k = 0; k < nonzero.size(); ++k) append_block(img, to_sparse(contract(mu, nonzero[k]), rows), k * rows.size());
    images.push_back(std::move(img));
  }
  LinearMap map(rows.size() * nonzero.size(), images);
  RowSpace kernel(cols.size());
  for (const auto& v : map.kernel()) kernel.insert(v);

  std::vector<Poly> candidates;
  for (const auto& row : kernel.reduced_basis()) candidates.push_back(poly_from_sparse(row, cols, nvars));
  for (const auto& m : monomials_of_degree(nvars, s + 1)) candidates.push_back(Poly::monomial(m));
  return Ideal(minimalize(std::move(candidates), s + 1), s + 1);
}

Ideal annihilator(const DualPoly& F) { return annihilator(std::vector<DualPoly>{F}); }

HSeq apolar_hf(const DualPoly& F) {
  if (F.is_zero()) throw PreconditionFailed("apolar Hilbert function of 0");
  return submodule_graded_dims({F});
}

DualPoly dual_generator(const Ideal& I) {
  if (!is_gorenstein(I)) throw NotGorenstein("socle of R/I is not one-dimensional");
  const int nvars = I.nvars();
  const int s = I.socle_degree();
  MonomialIndex unknowns = dual_column_index(nvars, s);
  const auto& gens = I.generators();
  std::vector<SparseVec> images;
  images.reserve(unknowns.size());
  for (const auto& a : unknowns.monomials()) {
    DualPoly Xa = DualPoly::monomial(a);
    SparseVec img;
    for (std::size_t k = 0; k < gens.size(); ++k) append_block(img, to_sparse(contract(gens[k], Xa), unknowns), k * unknowns.size());
    images.push_back(std::move(img));
  }
  LinearMap map(unknowns.size() * gens.size(), images);
  RowSpace perp(unknowns.size());
  for (const auto& v : map.kernel()) perp.insert(v);

  std::optional<DualPoly> F;
  for (const auto& row : perp.reduced_basis()) {
    if (unknowns[row.front().first].degree() != s) continue;
    if (F) throw VerificationFailure("top degree of the inverse system is not one-dimensional");
    F = from_sparse(row, unknowns, nvars);
  }
  if (!F) throw VerificationFailure("inverse system has no element of the socle degree");
  if (!same_ideal(annihilator(*F), I)) throw VerificationFailure("ann(F) differs from I for the recovered F");
  return *F;
}

bool SliceReport::all_passed() const {
  if (!preconditions_met || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const SliceCheck& c) { return c.passed(); });
}

SliceReport slice_identities(const Ideal& I) {
  SliceReport rep;
  if (I.nvars() != 3) {
    rep.failure = "ideal is not in three variables";
    return rep;
  }
  const HSeq& h = I.hilbert_function();
  if (!h.starts_133() || h[3] != 4) {
    rep.failure = "Hilbert function (" + h.to_string() + ") is not of shape (1,3,3,4,...)";
    return rep;
  }
  if (!is_gorenstein(I)) {
    rep.failure = "ideal is not Gorenstein";
    return rep;
  }
  const int N = I.truncation_bound();
  std::optional<Ideal> changed;
  if (!has_quadratic_shape(I)) {
    auto images = saturating_change(I);
    if (!images) {
      rep.failure = "quadratic part has no linear factor that can be moved to z";
      return rep;
    }
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(substitute(g, *images, N));
    changed.emplace(std::move(gens), N, I.order());
    rep.witness.coordinate_change = std::move(images);
    if (!has_quadratic_shape(*changed)) {
      rep.failure = "coordinate change did not produce quadratic parts xz, yz, z^2";
      return rep;
    }
  }
  const Ideal& J = changed ? *changed : I;
  const MonomialOrder& ord = J.order();

  const Monomial xz(1, 0, 1), yz(0, 1, 1), zz(0, 0, 2);
  std::vector<Poly> triple;
  for (const auto& target : {xz, yz, zz}) {
    for (const auto& g : J.standard_basis()) {
      if (leading_monomial_local(g, ord) == target) triple.push_back(g * leading_coeff_local(g, ord).inverse());
    }
  }
  if (triple.size() != 3) {
    rep.failure = "standard basis lacks elements with leading terms xz, yz, z^2";
    return rep;
  }
  std::vector<Poly> parts;
  for (std::size_t k = 0; k < 3; ++k) {
    Monomial lt = leading_monomial_local(triple[k], ord);
    Poly tail = triple[k];
    tail.add_term(lt, -tail.coeff(lt));
    Poly r = grauert_divide(tail, triple, ord, N).remainder;
    for (const auto& [m, c] : r.terms()) {
      if (m.e[2] != 0) {
        rep.failure = "could not eliminate z from the tail of " + triple[k].to_string();
        return rep;
      }
    }
    parts.push_back(to_two_vars(-r));
  }
  rep.witness.U = parts[0];
  rep.witness.V = parts[1];
  rep.witness.W = parts[2];
  rep.preconditions_met = true;

  rep.witness.T = dual_generator(J);
  rep.witness.slices = dual_slices(rep.witness.T);
  const int s = J.socle_degree();
  auto slice = [&](int n) {
    return n < static_cast<int>(rep.witness.slices.size()) ? rep.witness.slices[static_cast<std::size_t>(n)] : DualPoly(2);
  };
  const Monomial x(1, 0), y(0, 1);
  for (int n = 0; n <= s; ++n) {
    SliceCheck c;
    c.n = n;
    DualPoly Tn = slice(n);
    DualPoly Tn1 = slice(n + 1);
    c.z_step = slice(n + 2) == contract(rep.witness.W, Tn);
    c.x_step = contract(x, Tn1) == contract(rep.witness.U, Tn);
    c.y_step = contract(y, Tn1) == contract(rep.witness.V, Tn);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace apolar
