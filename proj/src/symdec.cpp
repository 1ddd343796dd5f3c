#include "apolar/symdec.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

std::vector<int> interval(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi + 1), 0);
  for (int i = lo; i <= hi; ++i) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::vector<int> minus_delta(const HSeq& h, std::initializer_list<int> positions) {
  std::vector<int> v = h.values();
  for (int p : positions) v[static_cast<std::size_t>(p)] -= 1;
  return v;
}

}  // namespace

std::vector<int> SymDecomp::row(int a) const {
  auto it = rows_.find(a);
  return it == rows_.end() ? std::vector<int>{} : it->second;
}

void SymDecomp::add(int a, const std::vector<int>& v) {
  std::vector<int>& r = rows_[a];
  if (r.size() < v.size()) r.resize(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] += v[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.empty()) rows_.erase(a);
}

HSeq SymDecomp::total() const {
  std::vector<int> sum;
  for (const auto& [a, r] : rows_) {
    if (sum.size() < r.size()) sum.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) sum[i] += r[i];
  }
  return HSeq(std::move(sum));
}

bool SymDecomp::is_symmetric() const {
  for (const auto& [a, r] : rows_) {
    const int top = s_ - a;
    if (static_cast<int>(r.size()) > top + 1) return false;
    for (int i = 0; i <= top; ++i) {
      auto at = [&](int j) { return j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : 0; };
      if (at(i) != at(top - i)) return false;
    }
  }
  return true;
}

std::string SymDecomp::to_string() const {
  std::string out;
  for (const auto& [a, r] : rows_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(a) + ":(";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    out += ")";
  }
  return out;
}

SymDecomp symmetric_decomposition(const Ideal& I) {
  ArtinQuotient A(I);
  if (A.socle_dimension() != 1) throw NotGorenstein("socle of R/I is not one-dimensional");
  const int s = A.socle_degree();
  // filt[q][i] = dim (0 : m^q) n m^i
  std::vector<std::vector<int>> filt(static_cast<std::size_t>(s + 2));
  for (int q = 1; q <= s + 1; ++q) filt[static_cast<std::size_t>(q)] = A.annihilator_filtration(q);
  auto C = [&](int a, int i) {
    const int q = s + 1 - a - i;
    if (q <= 0) return 0;
    const auto& f = filt[static_cast<std::size_t>(q)];
    return f[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i + 1)];
  };
  SymDecomp D(s);
  for (int a = 0; a <= s; ++a) {
    std::vector<int> row(static_cast<std::size_t>(s + 1), 0);
    for (int i = 0; i <= s; ++i) row[static_cast<std::size_t>(i)] = C(a, i) - C(a + 1, i);
    D.add(a, row);
  }
  return D;
}

SymDecomp codim2_unique_decomposition(const HSeq& h2) {
  const int s = h2.socle_degree();
  std::vector<int> ends = codim2_right_ends(h2);
  SymDecomp D(s);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    D.add(s - (ends[k] + i - 1), interval(i - 1, ends[k]));
  }
  return D;
}

Prediction predicted_typeI(int u, int v, int w) {
  if (u < 0 || v < 0 || w < 0) throw PreconditionFailed("u, v, w must be nonnegative");
  const int s = u + v + w + 3;
  Prediction p;
  p.ci = SymDecomp(s);
  p.ci.add(0, interval(0, s));
  p.ci.add(w, interval(1, u + v + 2));
  p.ci.add(w + v, interval(1, u + 2));
  HSeq h = p.ci.total();
  if (h.delta() == 1) {
    SymDecomp other = codim2_unique_decomposition(HSeq(minus_delta(h, {1})));
    SymDecomp widened(s);
    for (const auto& [a, r] : other.rows()) widened.add(a, r);
    widened.add(s - 2, {0, 1});
    p.other = widened;
  }
  return p;
}

Prediction predicted_type1334(const HSeq& h) {
  Classification c = classify_133(h);
  if (c.verdict != Verdict::TypeII && c.verdict != Verdict::TypeIII) {
    throw Rejected(to_string(c.verdict), "not a (1,3,3,4) complete intersection sequence");
  }
  const int s = h.socle_degree();
  const int k = c.peak;
  Prediction p;
  SymDecomp base = codim2_unique_decomposition(HSeq(minus_delta(h, {1, k})));
  p.ci = SymDecomp(s);
  for (const auto& [a, r] : base.rows()) p.ci.add(a, r);
  std::vector<int> delta(static_cast<std::size_t>(k + 1), 0);
  delta[1] = delta[static_cast<std::size_t>(k)] = 1;
  p.ci.add(s - 1 - k, delta);
  if (c.verdict == Verdict::TypeII) {
    SymDecomp other = codim2_unique_decomposition(HSeq(minus_delta(h, {1})));
    SymDecomp widened(s);
    for (const auto& [a, r] : other.rows()) widened.add(a, r);
    widened.add(s - 2, {0, 1});
    p.other = widened;
  }
  return p;
}

Prediction predicted_decomposition(const HSeq& h) {
  Classification c = classify_133(h);
  if (!c.admissible()) throw Rejected(to_string(c.verdict), c.reason);
  if (c.verdict == Verdict::TypeI) return predicted_typeI(c.uvw[0], c.uvw[1], c.uvw[2]);
  return predicted_type1334(h);
}

DualPoly non_ci_witness(const HSeq& h, const Field& field) {
  if (h.size() < 3 || h[1] != 3) throw PreconditionFailed("witness needs h_1 = 3");
  PowerSumForm F = codim2_dual_from_h(HSeq(minus_delta(h, {1})), field);
  return to_three_vars(F.form) + DualPoly::monomial(Monomial(0, 0, 2)).over(field);
}

bool check_q0(const Ideal& I) {
  SymDecomp D = symmetric_decomposition(I);
  DualPoly F = dual_generator(I);
  DualPoly top = F.homogeneous_part(F.degree());
  return apolar_hf(top).values() == D.row(0);
}

}  // namespace apolar
