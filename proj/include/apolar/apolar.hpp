#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/dual.hpp"
#include "apolar/localring.hpp"

namespace apolar {

// ann(W) for the submodule W generated by gens, with minimal generators sorted
// by increasing order and then by decreasing local leading monomial.
Ideal annihilator(const std::vector<DualPoly>& gens);
Ideal annihilator(const DualPoly& F);

HSeq apolar_hf(const DualPoly& F);

// F with ann(F) = I and deg F = socle degree. F is the reduced echelon element
// of I^perp whose pivot (its largest term of top degree) has coefficient 1.
DualPoly dual_generator(const Ideal& I);

struct SliceCheck {
  int n = 0;
  bool z_step = false;  // T_{n+2} = W o T_n
  bool x_step = false;  // x o T_{n+1} = U o T_n
  bool y_step = false;  // y o T_{n+1} = V o T_n
  bool passed() const { return z_step && x_step && y_step; }
};

struct SliceWitness {
  Poly U{2}, V{2}, W{2};
  DualPoly T{3};
  std::vector<DualPoly> slices;
  // Images of x, y, z when a linear change of coordinates was needed.
  std::optional<std::vector<Poly>> coordinate_change;
};

struct SliceReport {
  bool preconditions_met = false;
  std::string failure;
  SliceWitness witness;
  std::vector<SliceCheck> checks;
  bool all_passed() const;
};

// Writes I's quadratic generators as xz - U, yz - V, z^2 - W with U, V, W free
// of z and checks the slice recursions of its dual generator.
SliceReport slice_identities(const Ideal& I);

}  // namespace apolar
