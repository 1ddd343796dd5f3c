#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apolar/hseq.hpp"

namespace apolar {

// c^<i>: write c = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) greedily and
// return C(a_i + 1, i + 1) + ... + C(a_j + 1, j + 1).
long macaulay_bound(long c, int i);

// h_0 = 1 and h_{i+1} <= h_i^<i> for i >= 1.
bool is_o_sequence(const HSeq& h);

enum class Verdict { TypeI, TypeII, TypeIII, NotGorenstein, NotOSequence, OutOfScope };

std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::OutOfScope;
  // TypeI: h = (1, 3, 3, 3 x u, 2 x v, 1 x w, 1).
  std::array<int, 3> uvw{};
  // TypeII / TypeIII: d = max h repeated r + 1 times; peak = first fall.
  int d = 0;
  int r = 0;
  int peak = 0;
  std::string reason;

  bool admissible() const {
    return verdict == Verdict::TypeI || verdict == Verdict::TypeII || verdict == Verdict::TypeIII;
  }
};

Classification classify_133(const HSeq& h);

enum class Codim2Mode {
  // Hilbert function of S / ann(F).
  SingleF,
  // Hilbert function of S / ann(F, G): may exceed a single-F sequence by one at its peak.
  Pair,
};

bool codim2_gorenstein_check(const HSeq& h, Codim2Mode mode = Codim2Mode::SingleF);

// Right ends R_1 >= R_2 >= ... of the nested blocks [i-1, R_i] that add up
// to a codimension-two Gorenstein sequence.
std::vector<int> codim2_right_ends(const HSeq& h2);

// All O-sequences starting (1,3,3) with socle degree between 2 and max_socle,
// in lexicographic order.
std::vector<HSeq> enumerate_133(int max_socle);

}  // namespace apolar
