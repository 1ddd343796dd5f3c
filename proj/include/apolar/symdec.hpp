#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/construct.hpp"

namespace apolar {

// Rows D(a) indexed by the shift a. Zero rows are never stored and trailing
// zeros are trimmed, so equality compares only the nonzero content.
class SymDecomp {
 public:
  SymDecomp() = default;
  explicit SymDecomp(int socle_degree) : s_(socle_degree) {}

  int socle_degree() const { return s_; }
  const std::map<int, std::vector<int>>& rows() const { return rows_; }
  std::vector<int> row(int a) const;

  // Adds v into row a.
  void add(int a, const std::vector<int>& v);

  // Sum of all rows.
  HSeq total() const;
  // Every row a is symmetric about (s - a) / 2.
  bool is_symmetric() const;
  // "0:(1,2,3,2,1), 2:(0,1)"
  std::string to_string() const;

  friend bool operator==(const SymDecomp&, const SymDecomp&) = default;

 private:
  int s_ = 0;
  std::map<int, std::vector<int>> rows_;
};

SymDecomp symmetric_decomposition(const Ideal& I);

// The decomposition of a codimension two Gorenstein sequence into nested blocks.
SymDecomp codim2_unique_decomposition(const HSeq& h2);

struct Prediction {
  // The decomposition of every complete intersection with this h.
  SymDecomp ci;
  // The other Gorenstein decomposition, present when Delta(h) = 1.
  std::optional<SymDecomp> other;
};

Prediction predicted_typeI(int u, int v, int w);
Prediction predicted_type1334(const HSeq& h);
// Dispatches on classify_133; throws Rejected for inadmissible h.
Prediction predicted_decomposition(const HSeq& h);

// F' + Z^2 with apolar_hf(F') = h - (0,1). Its apolar algebra realizes the
// non-complete-intersection decomposition.
DualPoly non_ci_witness(const HSeq& h, const Field& field = Field());

// D(0) equals the apolar Hilbert function of the top form of the dual generator.
bool check_q0(const Ideal& I);

}  // namespace apolar
