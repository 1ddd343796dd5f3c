#pragma once

#include <optional>
#include <vector>

#include "apolar/hseq.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// x^a o X^b = X^(b-a) when a <= b componentwise, else 0.
DualPoly contract(const Monomial& m, const DualPoly& F);
DualPoly contract(const Poly& f, const DualPoly& F);

// T = T_0 + Z T_1 + Z^2 T_2 + ...; each T_i is returned over X, Y.
std::vector<DualPoly> dual_slices(const DualPoly& T);
DualPoly reassemble_slices(const std::vector<DualPoly>& slices);

// Dual monomials of degree <= max_degree sorted by decreasing degree, then
// decreasing tau. Used as column order wherever the top-degree term must pivot.
MonomialIndex dual_column_index(int nvars, int max_degree);
SparseVec to_sparse(const DualPoly& F, const MonomialIndex& index);
DualPoly from_sparse(const SparseVec& v, const MonomialIndex& index, int nvars);

// Span of all contractions of the generators, kept as an echelon basis whose
// pivots are top-degree terms.
class DualSubmodule {
 public:
  DualSubmodule(const std::vector<DualPoly>& gens, int upto = -1);

  int nvars() const { return nvars_; }
  int upto() const { return upto_; }
  std::size_t dimension() const { return space_.rank(); }
  // Entry i = dim (W n D_{<=i} + D_{<i}) / D_{<i}.
  HSeq graded_dims() const;
  bool contains(const DualPoly& F) const;
  // Part of F outside the span: F reduced against the echelon basis.
  DualPoly reduce(const DualPoly& F) const;
  std::vector<DualPoly> basis() const;

 private:
  int nvars_;
  int upto_;
  MonomialIndex index_;
  RowSpace space_;
};

HSeq submodule_graded_dims(const std::vector<DualPoly>& gens, int upto = -1);

// sigma with sigma o F = target, min_order <= ord, deg sigma <= max_degree.
// Unknowns are ordered by decreasing tau-bar (low degree first) and every free
// unknown is set to 0, so the answer is supported on the earliest possible terms.
std::optional<Poly> solve_contraction(const DualPoly& F, const DualPoly& target, int max_degree,
                                      int min_order = 0);

}  // namespace apolar
