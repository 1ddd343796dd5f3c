#include "apolar/dual.hpp"

#include <algorithm>
#include <deque>

namespace apolar {

DualPoly contract(const Monomial& m, const DualPoly& F) {
  if (m.nvars != F.nvars()) throw ArityMismatch("contraction between rings of different arity");
  DualPoly out(F.nvars());
  for (const auto& [n, c] : F.terms()) {
    if (m.divides(n)) out.add_term(m.quotient_into(n), c);
  }
  return out;
}

DualPoly contract(const Poly& f, const DualPoly& F) {
  if (f.nvars() != F.nvars()) throw ArityMismatch("contraction between rings of different arity");
  DualPoly out(F.nvars());
  for (const auto& [m, a] : f.terms()) {
    for (const auto& [n, c] : F.terms()) {
      if (m.divides(n)) out.add_term(m.quotient_into(n), a * c);
    }
  }
  return out;
}

std::vector<DualPoly> dual_slices(const DualPoly& T) {
  if (T.nvars() != 3) throw ArityMismatch("slices need three dual variables");
  std::vector<DualPoly> out;
  for (const auto& [m, c] : T.terms()) {
    std::size_t k = m.e[2];
    while (out.size() <= k) out.emplace_back(2);
    out[k].add_term(Monomial(m.e[0], m.e[1]), c);
  }
  if (out.empty()) out.emplace_back(2);
  return out;
}

DualPoly reassemble_slices(const std::vector<DualPoly>& slices) {
  DualPoly out(3);
  for (std::size_t k = 0; k < slices.size(); ++k) {
    for (const auto& [m, c] : slices[k].terms()) out.add_term(Monomial(m.e[0], m.e[1], static_cast<int>(k)), c);
  }
  return out;
}

MonomialIndex dual_column_index(int nvars, int max_degree) {
  MonomialOrder ord;
  auto mons = monomials_up_to(nvars, max_degree);
  std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) {
    return ord.compare(a, b) > 0;
  });
  return MonomialIndex(std::move(mons));
}

SparseVec to_sparse(const DualPoly& F, const MonomialIndex& index) {
  SparseVec v;
  v.reserve(F.size());
  for (const auto& [m, c] : F.terms()) {
    long i = index.find(m);
    if (i < 0) throw PreconditionFailed("term " + m.to_string(true) + " outside the column index");
    v.emplace_back(static_cast<std::size_t>(i), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

DualPoly from_sparse(const SparseVec& v, const MonomialIndex& index, int nvars) {
  DualPoly F(nvars);
  for (const auto& [i, c] : v) F.add_term(index[i], c);
  return F;
}

DualSubmodule::DualSubmodule(const std::vector<DualPoly>& gens, int upto)
    : nvars_(gens.empty() ? 3 : gens.front().nvars()), upto_(upto), space_(0) {
  int top = -1;
  for (const auto& g : gens) {
    if (g.nvars() != nvars_) throw ArityMismatch("generators over different dual rings");
    top = std::max(top, g.degree());
  }
  if (upto_ < top) upto_ = top;
  index_ = dual_column_index(nvars_, std::max(upto_, 0));
  space_ = RowSpace(index_.size());

  std::deque<SparseVec> queue;
  for (const auto& g : gens) queue.push_back(to_sparse(g, index_));
  while (!queue.empty()) {
    SparseVec r = space_.reduce(queue.front());
    queue.pop_front();
    if (r.empty()) continue;
    space_.insert(r);
    DualPoly added = from_sparse(r, index_, nvars_);
    for (int v = 0; v < nvars_; ++v) {
      DualPoly next = contract(Monomial::variable(nvars_, v), added);
      if (!next.is_zero()) queue.push_back(to_sparse(next, index_));
    }
  }
}

HSeq DualSubmodule::graded_dims() const {
  std::vector<int> dims(static_cast<std::size_t>(std::max(upto_, 0)) + 1, 0);
  for (auto p : space_.pivots()) ++dims[static_cast<std::size_t>(index_[p].degree())];
  return HSeq(std::move(dims));
}

bool DualSubmodule::contains(const DualPoly& F) const {
  if (F.degree() > upto_) return false;
  return space_.contains(to_sparse(F, index_));
}

DualPoly DualSubmodule::reduce(const DualPoly& F) const {
  if (F.degree() > upto_) throw PreconditionFailed("reduction above the submodule bound");
  return from_sparse(space_.reduce(to_sparse(F, index_)), index_, nvars_);
}

std::vector<DualPoly> DualSubmodule::basis() const {
  std::vector<DualPoly> out;
  for (const auto& row : space_.reduced_basis()) out.push_back(from_sparse(row, index_, nvars_));
  return out;
}

HSeq submodule_graded_dims(const std::vector<DualPoly>& gens, int upto) {
  return DualSubmodule(gens, upto).graded_dims();
}

std::optional<Poly> solve_contraction(const DualPoly& F, const DualPoly& target, int max_degree, int min_order) {
  int n = F.nvars();
  if (target.nvars() != n) throw ArityMismatch("contraction target over a different dual ring");
  if (target.degree() > F.degree()) return std::nullopt;
  if (target.is_zero()) return Poly(n);
  MonomialIndex rows = dual_column_index(n, std::max(F.degree(), 0));
  MonomialOrder ord;
  std::vector<Monomial> unknowns;
  for (const auto& m : monomials_up_to(n, std::min(max_degree, F.degree()))) {
    if (m.degree() >= min_order) unknowns.push_back(m);
  }
  std::sort(unknowns.begin(), unknowns.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare_local(a, b) > 0; });
  std::vector<SparseVec> cols;
  cols.reserve(unknowns.size());
  for (const auto& m : unknowns) cols.push_back(to_sparse(contract(m, F), rows));
  LinearMap map(rows.size(), cols);
  auto sol = map.solve(to_sparse(target, rows));
  if (!sol) return std::nullopt;
  Poly sigma(n);
  for (const auto& [j, c] : *sol) sigma.add_term(unknowns[j], c);
  return sigma;
}

}  // namespace apolar
