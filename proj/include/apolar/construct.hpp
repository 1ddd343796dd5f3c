#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolar.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

// (yz - x^A, xz - y^B, xy - z^C) with A = u+v+w+2, B = u+v+2, C = u+2, or
// (x^2, y^2, z^2) when u = v = w = 0.
Ideal construct_h3le3(int u, int v, int w, const Field& field = Field());

// F = sum_i (a_i X + b_i Y)^[e_i] in K_DP[X, Y].
struct PowerSumForm {
  std::vector<std::array<Scalar, 2>> forms;
  std::vector<int> exponents;
  DualPoly form{2};
};

// Pairwise independent linear forms X, Y, X + Y, X - Y, X + 2Y, X - 2Y, ...
// Throws UnrealizableByPowers when the field has fewer than count of them.
std::vector<std::array<Scalar, 2>> linear_forms(std::size_t count, const Field& field = Field());

DualPoly power_sum(const std::vector<std::array<Scalar, 2>>& forms, const std::vector<int>& exponents);

// A power sum whose apolar algebra has Hilbert function h2.
PowerSumForm codim2_dual_from_h(const HSeq& h2, const Field& field = Field());

// G of degree k with S / ann(F, G) having Hilbert function target, x o G and
// y o G in m^2 o F.
DualPoly find_G(const DualPoly& F, const HSeq& target, int k);

struct NormalizedG {
  DualPoly G{2};
  Poly a2p{2};  // y o G = (x a2p) o F
};

NormalizedG normalize_G(const DualPoly& F, const DualPoly& G);

// Columns (d11, d21), (d12, -x), (-x a2', y) of the relation module of <F, G'>.
struct SyzygyData {
  Poly d11{2}, d21{2}, d12{2}, a2p{2};
  DualPoly F{2}, G{2};

  Poly d12p() const;   // d12 = x d12' + y d12''
  Poly d12pp() const;
  Poly U1() const;
  Poly U2() const;
  Poly V1() const;
  Poly V2() const;
  Poly U() const;
  Poly V() const;
  Poly W() const;
};

SyzygyData syzygy_data(const DualPoly& F, const DualPoly& G);

// I = (xz - U, yz - V, z^2 - W).
Ideal assemble_ci(const SyzygyData& sd);

struct ConstructOptions {
  Field field;
  std::optional<DualPoly> dual_F;
  std::optional<DualPoly> dual_G;
};

struct ConstructionTrace {
  HSeq h;
  Classification classification;
  // Type II / III only.
  HSeq h1, h2;
  std::optional<PowerSumForm> power_sum;
  DualPoly F{2}, G{2}, G_normalized{2};
  std::optional<SyzygyData> syzygy;
  std::optional<Ideal> ideal;
  std::vector<std::string> checks;
};

ConstructionTrace construct_ci_traced(const HSeq& h, const ConstructOptions& options = {});
Ideal construct_ci(const HSeq& h, const ConstructOptions& options = {});

}  // namespace apolar
