#pragma once

// Brute-force reference computations. They share only the scalar type and the
// sparse row space with the library; monomials, products, contractions and
// all spans are rebuilt here from the definitions.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "apolar/hseq.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace oracle {

using Exp = std::array<int, 3>;

inline int deg(const Exp& e) { return e[0] + e[1] + e[2]; }

inline std::vector<Exp> exponents_below(int nvars, int bound) {
  std::vector<Exp> out;
  for (int d = 0; d < bound; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) {
        int c = d - a - b;
        if (nvars == 2 && c != 0) continue;
        out.push_back({a, b, c});
      }
  return out;
}

inline Exp exp_of(const apolar::Monomial& m) { return {m.e[0], m.e[1], m.e[2]}; }

class Coords {
 public:
  Coords(int nvars, int bound) : exps_(exponents_below(nvars, bound)) {
    for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = i;
  }
  std::size_t size() const { return exps_.size(); }
  const Exp& operator[](std::size_t i) const { return exps_[i]; }
  long find(const Exp& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }

 private:
  std::vector<Exp> exps_;
  std::map<Exp, std::size_t> index_;
};

// mu * g with every term of degree >= bound dropped.
inline apolar::SparseVec shifted(const apolar::Poly& g, const Exp& mu, const Coords& co) {
  std::map<std::size_t, apolar::Scalar> acc;
  for (const auto& [m, c] : g.terms()) {
    Exp e = exp_of(m);
    for (int t = 0; t < 3; ++t) e[t] += mu[t];
    long k = co.find(e);
    if (k >= 0) acc[static_cast<std::size_t>(k)] += c;
  }
  apolar::SparseVec v;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) v.emplace_back(k, c);
  return v;
}

// Span of (I + m^bound) / m^bound, or of (m I + m^bound) / m^bound.
inline apolar::RowSpace ideal_mod_power(const std::vector<apolar::Poly>& gens, int nvars, int bound,
                                        bool times_m = false) {
  Coords co(nvars, bound);
  apolar::RowSpace space(co.size());
  for (const auto& g : gens)
    for (std::size_t i = 0; i < co.size(); ++i) {
      if (times_m && deg(co[i]) == 0) continue;
      space.insert(shifted(g, co[i], co));
    }
  return space;
}

// dim R / (I + m^bound).
inline int colength_mod_power(const std::vector<apolar::Poly>& gens, int nvars, int bound) {
  Coords co(nvars, bound);
  return static_cast<int>(co.size() - ideal_mod_power(gens, nvars, bound).rank());
}

// Smallest k with m^k in I, by Nakayama: the first k where adding m^k changes nothing.
inline int truncation(const std::vector<apolar::Poly>& gens, int nvars, int ceiling = 40) {
  int prev = colength_mod_power(gens, nvars, 1);
  for (int k = 1; k < ceiling; ++k) {
    int next = colength_mod_power(gens, nvars, k + 1);
    if (next == prev) return k;
    prev = next;
  }
  throw std::runtime_error("oracle: ideal is not m-primary below the ceiling");
}

inline apolar::HSeq hilbert_function(const std::vector<apolar::Poly>& gens, int nvars) {
  int N = truncation(gens, nvars);
  std::vector<int> h;
  int prev = 0;
  for (int k = 1; k <= N; ++k) {
    int c = colength_mod_power(gens, nvars, k);
    h.push_back(c - prev);
    prev = c;
  }
  return apolar::HSeq(h);
}

inline bool contains(const std::vector<apolar::Poly>& gens, int nvars, const apolar::Poly& f) {
  int N = truncation(gens, nvars);
  Coords co(nvars, N);
  return ideal_mod_power(gens, nvars, N).contains(shifted(f, {0, 0, 0}, co));
}

inline bool same_ideal(const std::vector<apolar::Poly>& a, const std::vector<apolar::Poly>& b, int nvars) {
  for (const auto& f : a)
    if (!contains(b, nvars, f)) return false;
  for (const auto& f : b)
    if (!contains(a, nvars, f)) return false;
  return true;
}

// dim I / m I.
inline int minimal_generator_count(const std::vector<apolar::Poly>& gens, int nvars) {
  int N = truncation(gens, nvars) + 1;
  return static_cast<int>(ideal_mod_power(gens, nvars, N).rank() - ideal_mod_power(gens, nvars, N, true).rank());
}

// dim I^perp / (m o I^perp), which is the socle dimension of R / I.
inline int socle_dimension(const std::vector<apolar::Poly>& gens, int nvars) {
  int N = truncation(gens, nvars);
  Coords co(nvars, N);
  apolar::RowSpace span = ideal_mod_power(gens, nvars, N);
  std::vector<apolar::SparseVec> rows = span.reduced_basis();
  std::vector<long> pivot_of(co.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) pivot_of[rows[r].front().first] = static_cast<long>(r);
  // Orthogonal complement under the monomial pairing.
  std::vector<std::map<std::size_t, apolar::Scalar>> perp;
  for (std::size_t j = 0; j < co.size(); ++j) {
    if (pivot_of[j] >= 0) continue;
    std::map<std::size_t, apolar::Scalar> v;
    v[j] = apolar::Scalar(1);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [k, c] : rows[r])
        if (k == j) v[rows[r].front().first] = -c;
    perp.push_back(v);
  }
  for (const auto& row : rows)
    for (const auto& v : perp) {
      apolar::Scalar dot;
      for (const auto& [k, c] : row) {
        auto it = v.find(k);
        if (it != v.end()) dot += c * it->second;
      }
      if (!dot.is_zero()) throw std::runtime_error("oracle: complement is not orthogonal");
    }
  apolar::RowSpace lowered(co.size());
  for (const auto& v : perp)
    for (int t = 0; t < nvars; ++t) {
      std::map<std::size_t, apolar::Scalar> w;
      for (const auto& [k, c] : v) {
        Exp e = co[k];
        if (e[t] == 0) continue;
        --e[t];
        w[static_cast<std::size_t>(co.find(e))] = c;
      }
      apolar::SparseVec s(w.begin(), w.end());
      lowered.insert(s);
    }
  return static_cast<int>(perp.size() - lowered.rank());
}

// x^a o X^b = X^(b-a), read off the definition.
inline apolar::DualPoly contract(const apolar::Poly& f, const apolar::DualPoly& F) {
  apolar::DualPoly out(F.nvars());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : F.terms()) {
      if (a.e[0] > b.e[0] || a.e[1] > b.e[1] || a.e[2] > b.e[2]) continue;
      apolar::Monomial q = F.nvars() == 2 ? apolar::Monomial(b.e[0] - a.e[0], b.e[1] - a.e[1])
                                          : apolar::Monomial(b.e[0] - a.e[0], b.e[1] - a.e[1], b.e[2] - a.e[2]);
      out.add_term(q, ca * cb);
    }
  return out;
}

inline apolar::Poly multiply(const apolar::Poly& f, const apolar::Poly& g) {
  apolar::Poly out(f.nvars());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      apolar::Monomial m = f.nvars() == 2 ? apolar::Monomial(a.e[0] + b.e[0], a.e[1] + b.e[1])
                                          : apolar::Monomial(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]);
      out.add_term(m, ca * cb);
    }
  return out;
}

// Graded dimensions of the span W of all contractions of the generators:
// entry i = dim (W n D_<=i) - dim (W n D_<i).
inline apolar::HSeq inverse_system_hf(const std::vector<apolar::DualPoly>& gens) {
  int nvars = gens.front().nvars();
  int top = 0;
  for (const auto& F : gens) top = std::max(top, F.degree());
  Coords co(nvars, top + 1);
  // Columns ordered by decreasing degree, so echelon rows pivot on their top degree.
  std::vector<std::size_t> col(co.size());
  std::vector<std::size_t> order(co.size());
  for (std::size_t i = 0; i < co.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(co[a]) > deg(co[b]); });
  for (std::size_t k = 0; k < order.size(); ++k) col[order[k]] = k;
  apolar::RowSpace W(co.size());
  for (const auto& F : gens)
    for (std::size_t i = 0; i < co.size(); ++i) {
      apolar::Poly mu = apolar::Poly::monomial(
          nvars == 2 ? apolar::Monomial(co[i][0], co[i][1]) : apolar::Monomial(co[i][0], co[i][1], co[i][2]));
      apolar::DualPoly G = oracle::contract(mu, F);
      std::map<std::size_t, apolar::Scalar> v;
      for (const auto& [m, c] : G.terms()) v[col[static_cast<std::size_t>(co.find(exp_of(m)))]] = c;
      W.insert(apolar::SparseVec(v.begin(), v.end()));
    }
  std::vector<int> h(static_cast<std::size_t>(top + 1), 0);
  for (std::size_t p : W.pivots()) ++h[static_cast<std::size_t>(deg(co[order[p]]))];
  return apolar::HSeq(h);
}

inline apolar::HSeq apolar_hf(const apolar::DualPoly& F) { return inverse_system_hf({F}); }

// Number of degree i+1 monomials in nvars variables whose degree i divisors
// all lie among the c lex-smallest degree i monomials: the Hilbert function
// of the lex-segment quotient one degree up.
inline long lex_segment_growth(long c, int i, int nvars = 13) {
  std::vector<std::vector<int>> mons;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      mons.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, i);
  if (static_cast<long>(mons.size()) < c) throw std::runtime_error("oracle: too few variables");
  std::sort(mons.begin(), mons.end());
  std::set<std::vector<int>> kept(mons.begin(), mons.begin() + c);
  std::set<std::vector<int>> up;
  for (const auto& m : kept)
    for (int t = 0; t < nvars; ++t) {
      auto u = m;
      ++u[static_cast<std::size_t>(t)];
      up.insert(u);
    }
  long count = 0;
  for (const auto& u : up) {
    bool all = true;
    for (int t = 0; t < nvars && all; ++t) {
      if (u[static_cast<std::size_t>(t)] == 0) continue;
      auto d = u;
      --d[static_cast<std::size_t>(t)];
      all = kept.count(d) > 0;
    }
    if (all) ++count;
  }
  return count;
}

}  // namespace oracle
