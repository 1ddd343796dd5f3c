#include "apolar/localring.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <tuple>

namespace apolar {

namespace {

bool is_default(const MonomialOrder& ord) {
  MonomialOrder d;
  return ord.kind() == d.kind() && ord.precedence() == d.precedence();
}

// Local leading monomial; under the default order this is the first stored term.
Monomial lead(const Poly& p, const MonomialOrder& ord) {
  if (is_default(ord)) return p.terms().begin()->first;
  return leading_monomial_local(p, ord);
}

// p -= k * q * g, dropping degrees above N.
void subtract_multiple(Poly& p, const Poly& g, const Monomial& q, const Scalar& k, int N) {
  int dq = q.degree();
  for (const auto& [m, a] : g.terms()) {
    if (m.degree() + dq > N) break;
    p.add_term(m * q, -(k * a));
  }
}

int find_divisor(const Monomial& m, const std::vector<Monomial>& lts) {
  for (std::size_t j = 0; j < lts.size(); ++j) {
    if (lts[j].divides(m)) return static_cast<int>(j);
  }
  return -1;
}

// Full reduction by a monic basis.
Poly reduce_monic(Poly p, const std::vector<Poly>& basis, const std::vector<Monomial>& lts,
                  const MonomialOrder& ord, int N) {
  Poly r(p.nvars());
  while (!p.is_zero()) {
    Monomial lt = lead(p, ord);
    Scalar c = p.coeff(lt);
    int j = find_divisor(lt, lts);
    if (j < 0) {
      r.add_term(lt, c);
      p.add_term(lt, -c);
      continue;
    }
    subtract_multiple(p, basis[static_cast<std::size_t>(j)], lts[static_cast<std::size_t>(j)].quotient_into(lt), c, N);
  }
  return r;
}

Poly make_monic(Poly f, const MonomialOrder& ord) {
  Scalar lc = f.coeff(lead(f, ord));
  if (!lc.is_one()) f *= lc.inverse();
  return f;
}

std::vector<int> hilbert_upto(const std::vector<Monomial>& lts, int nvars, int N) {
  std::vector<int> hf(static_cast<std::size_t>(N) + 1, 0);
  for (int d = 0; d <= N; ++d) {
    for (const auto& m : monomials_of_degree(nvars, d)) {
      if (find_divisor(m, lts) < 0) ++hf[static_cast<std::size_t>(d)];
    }
  }
  return hf;
}

SparseVec shift(const SparseVec& v, const MonomialIndex& index, const Monomial& var, int N) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) {
    Monomial m = index[i] * var;
    if (m.degree() > N) continue;
    long k = index.find(m);
    if (k < 0) throw PreconditionFailed("column index does not cover all monomials up to the bound");
    out.emplace_back(static_cast<std::size_t>(k), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MonomialIndex local_columns(int nvars, int N, const MonomialOrder& ord) {
  auto mons = monomials_up_to(nvars, N);
  std::stable_sort(mons.begin(), mons.end(),
                   [&](const Monomial& a, const Monomial& b) { return ord.compare_local(a, b) > 0; });
  return MonomialIndex(std::move(mons));
}

}  // namespace

int truncation_ceiling() {
  if (const char* env = std::getenv("APOLAR_TRUNCATION_CEILING")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
  }
  return 64;
}

Division grauert_divide(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& ord, int N) {
  std::vector<Monomial> lts;
  std::vector<Scalar> lcs;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw PreconditionFailed("division by the zero polynomial");
    if (g.nvars() != f.nvars()) throw ArityMismatch("divisor over a different ring");
    lts.push_back(lead(g, ord));
    lcs.push_back(g.coeff(lts.back()));
  }
  Division out{std::vector<Poly>(divisors.size(), Poly(f.nvars())), Poly(f.nvars())};
  Poly p = f.truncated(N);
  while (!p.is_zero()) {
    Monomial lt = lead(p, ord);
    Scalar c = p.coeff(lt);
    int j = find_divisor(lt, lts);
    if (j < 0) {
      out.remainder.add_term(lt, c);
      p.add_term(lt, -c);
      continue;
    }
    auto uj = static_cast<std::size_t>(j);
    Monomial q = lts[uj].quotient_into(lt);
    Scalar k = c / lcs[uj];
    out.quotients[uj].add_term(q, k);
    subtract_multiple(p, divisors[uj], q, k, N);
  }
  return out;
}

std::vector<Poly> truncated_standard_basis(const std::vector<Poly>& gens, const MonomialOrder& ord, int N) {
  std::vector<Poly> basis;
  std::vector<Monomial> lts;
  std::set<std::tuple<int, std::size_t, std::size_t>> pairs;

  auto add = [&](const Poly& f) {
    Poly r = reduce_monic(f.truncated(N), basis, lts, ord, N);
    if (r.is_zero()) return;
    r = make_monic(std::move(r), ord);
    Monomial lt = lead(r, ord);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      int d = lts[i].lcm(lt).degree();
      if (d <= N) pairs.emplace(d, i, k);
    }
    basis.push_back(std::move(r));
    lts.push_back(lt);
  };

  for (const auto& g : gens) add(g);
  while (!pairs.empty()) {
    auto [d, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Monomial l = lts[i].lcm(lts[j]);
    Poly s(basis[i].nvars());
    subtract_multiple(s, basis[i], lts[i].quotient_into(l), Scalar(-1), N);
    subtract_multiple(s, basis[j], lts[j].quotient_into(l), Scalar(1), N);
    add(s);
  }

  // Keep one element per minimal leading monomial, then reduce tails.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || !lts[j].divides(lts[i])) continue;
      redundant = !(lts[j] == lts[i]) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t a, std::size_t b) { return ord.compare_local(lts[a], lts[b]) > 0; });
  std::vector<Poly> out;
  std::vector<Monomial> out_lts;
  for (auto i : keep) {
    out.push_back(basis[i]);
    out_lts.push_back(lts[i]);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    Poly tail = out[i];
    tail.add_term(out_lts[i], -tail.coeff(out_lts[i]));
    Poly reduced = reduce_monic(std::move(tail), out, out_lts, ord, N);
    reduced.add_term(out_lts[i], Scalar(1));
    out[i] = std::move(reduced);
  }
  return out;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons, const MonomialOrder& ord) {
  std::sort(mons.begin(), mons.end());
  mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
  std::vector<Monomial> out;
  for (const auto& m : mons) {
    bool divisible = false;
    for (const auto& o : mons) {
      if (!(o == m) && o.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare_local(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(std::vector<Poly> generators, std::optional<int> hint, MonomialOrder ord)
    : nvars_(generators.empty() ? 3 : generators.front().nvars()), ord_(ord), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_) throw ArityMismatch("generators over different rings");
  }
  if (nvars_ != 2 && nvars_ != 3) throw ArityMismatch("only 2 or 3 variables are supported");
  const int ceiling = truncation_ceiling();

  auto compute = [&](int N) {
    sb_ = truncated_standard_basis(gens_, ord_, N);
    lt_.clear();
    for (const auto& g : sb_) lt_.push_back(lead(g, ord_));
    lt_ = minimal_monomials(lt_, ord_);
    auto hf = hilbert_upto(lt_, nvars_, N);
    auto zero = std::find(hf.begin(), hf.end(), 0);
    if (zero == hf.end()) return -1;
    hf_ = HSeq(std::vector<int>(hf.begin(), zero));
    return static_cast<int>(zero - hf.begin());
  };

  int N = std::clamp(hint.value_or(1), 1, ceiling);
  for (;;) {
    int found = compute(N);
    if (found >= 0) {
      if (found != N) compute(found);
      N_ = found;
      break;
    }
    if (N >= ceiling) {
      throw NotArtinian("m^N is not contained in the ideal for any N <= " + std::to_string(ceiling) +
                        "; the ideal is not m-primary (or raise APOLAR_TRUNCATION_CEILING)");
    }
    N = std::min(2 * N, ceiling);
  }
}

bool Ideal::in_leading_ideal(const Monomial& m) const {
  return m.degree() >= N_ || find_divisor(m, lt_) >= 0;
}

Poly Ideal::normal_form(const Poly& f) const {
  if (f.nvars() != nvars_) throw ArityMismatch("polynomial over a different ring");
  std::vector<Monomial> lts;
  for (const auto& g : sb_) lts.push_back(lead(g, ord_));
  return reduce_monic(f.truncated(N_), sb_, lts, ord_, N_);
}

std::vector<Poly> standard_basis(const Ideal& I) { return I.standard_basis(); }
HSeq hilbert_function(const Ideal& I) { return I.hilbert_function(); }
int truncation_bound(const Ideal& I) { return I.truncation_bound(); }

// ---------------------------------------------------------------------------
// Spans and generators

SparseVec to_sparse(const Poly& f, const MonomialIndex& index) {
  SparseVec v;
  v.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    long i = index.find(m);
    if (i < 0) throw PreconditionFailed("term " + m.to_string() + " outside the column index");
    v.emplace_back(static_cast<std::size_t>(i), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Poly poly_from_sparse(const SparseVec& v, const MonomialIndex& index, int nvars) {
  Poly f(nvars);
  for (const auto& [i, c] : v) f.add_term(index[i], c);
  return f;
}

RowSpace ideal_span(const std::vector<Poly>& gens, const MonomialIndex& columns, int N, bool times_m) {
  RowSpace space(columns.size());
  if (gens.empty()) return space;
  int nvars = gens.front().nvars();
  std::deque<SparseVec> queue;
  for (const auto& g : gens) {
    SparseVec v = to_sparse(g.truncated(N), columns);
    if (times_m) {
      for (int k = 0; k < nvars; ++k) queue.push_back(shift(v, columns, Monomial::variable(nvars, k), N));
    } else {
      queue.push_back(std::move(v));
    }
  }
  while (!queue.empty()) {
    SparseVec r = space.reduce(queue.front());
    queue.pop_front();
    if (r.empty()) continue;
    for (int k = 0; k < nvars; ++k) {
      SparseVec next = shift(r, columns, Monomial::variable(nvars, k), N);
      if (!next.empty()) queue.push_back(std::move(next));
    }
    space.insert_reduced(std::move(r));
  }
  return space;
}

std::vector<Poly> minimalize(std::vector<Poly> candidates, int N, const MonomialOrder& ord) {
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(), [](const Poly& p) { return p.is_zero(); }),
                   candidates.end());
  if (candidates.empty()) return {};
  int nvars = candidates.front().nvars();
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Poly& a, const Poly& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return ord.compare_local(lead(a, ord), lead(b, ord)) > 0;
  });
  MonomialIndex columns = local_columns(nvars, N, ord);
  RowSpace space = ideal_span(candidates, columns, N, true);
  std::vector<Poly> chosen;
  for (const auto& c : candidates) {
    SparseVec r = space.reduce(to_sparse(c.truncated(N), columns));
    if (r.empty()) continue;
    space.insert_reduced(std::move(r));
    chosen.push_back(c);
  }
  return chosen;
}

std::vector<Poly> minimal_generators(const Ideal& I) {
  return minimalize(I.generators(), I.truncation_bound(), I.order());
}

int minimal_generator_count(const Ideal& I) { return static_cast<int>(minimal_generators(I).size()); }

bool is_complete_intersection(const Ideal& I) { return minimal_generator_count(I) == I.nvars(); }

bool is_gorenstein(const Ideal& I) {
  if (I.colength() == 0) return false;
  return ArtinQuotient(I).socle_dimension() == 1;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) return false;
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

Ideal section_with_S(const Ideal& I) {
  if (I.nvars() != 3) throw ArityMismatch("section with K[[x,y]] needs an ideal of K[[x,y,z]]");
  const int N = I.truncation_bound();
  const MonomialOrder& ord = I.order();
  MonomialIndex all = local_columns(3, N, ord);
  std::vector<Monomial> cols;
  for (const auto& m : all.monomials()) {
    if (m.e[2] > 0) cols.push_back(m);
  }
  const std::size_t z_count = cols.size();
  for (const auto& m : all.monomials()) {
    if (m.e[2] == 0) cols.push_back(m);
  }
  MonomialIndex columns(std::move(cols));
  RowSpace span = ideal_span(I.standard_basis(), columns, N);
  std::vector<Poly> candidates;
  for (const auto& row : span.rows()) {
    if (row.front().first >= z_count) candidates.push_back(to_two_vars(poly_from_sparse(row, columns, 3)));
  }
  return Ideal(minimalize(std::move(candidates), N, ord), N, ord);
}

// ---------------------------------------------------------------------------
// ArtinQuotient

ArtinQuotient::ArtinQuotient(const Ideal& I)
    : nvars_(I.nvars()), N_(I.truncation_bound()), s_(I.socle_degree()), hf_(I.hilbert_function()) {
  all_ = MonomialIndex(monomials_up_to(nvars_, N_ - 1));
  std::vector<long> pos(all_.size(), -1);
  for (std::size_t k = 0; k < all_.size(); ++k) {
    if (!I.in_leading_ideal(all_[k])) {
      pos[k] = static_cast<long>(basis_.size());
      basis_.push_back(all_[k]);
    }
  }
  nf_.resize(all_.size());
  for (std::size_t k = 0; k < all_.size(); ++k) {
    if (pos[k] >= 0) {
      nf_[k] = {{static_cast<std::size_t>(pos[k]), Scalar(1)}};
      continue;
    }
    Poly r = I.normal_form(Poly::monomial(all_[k]));
    SparseVec v;
    for (const auto& [m, c] : r.terms()) {
      long i = all_.find(m);
      if (i < 0 || pos[static_cast<std::size_t>(i)] < 0) throw VerificationFailure("normal form left a non-standard term");
      v.emplace_back(static_cast<std::size_t>(pos[static_cast<std::size_t>(i)]), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    nf_[k] = std::move(v);
  }
}

SparseVec ArtinQuotient::reduce(const Poly& f) const {
  SparseVec out;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() >= N_) break;
    axpy(out, c, nf_[static_cast<std::size_t>(all_.find(m))]);
  }
  return out;
}

const SparseVec& ArtinQuotient::product(const Monomial& mu, std::size_t j) const {
  Monomial m = mu * basis_[j];
  if (m.degree() >= N_) return zero_;
  return nf_[static_cast<std::size_t>(all_.find(m))];
}

std::vector<int> ArtinQuotient::annihilator_filtration(int q) const {
  std::vector<int> out(static_cast<std::size_t>(s_) + 2, 0);
  const std::size_t dim = basis_.size();
  if (dim == 0) return out;
  auto mons = monomials_of_degree(nvars_, q);
  RowSpace images(mons.size() * dim);
  // Basis elements by decreasing degree: a prefix spans m^i.
  std::vector<std::size_t> order(dim);
  for (std::size_t j = 0; j < dim; ++j) order[j] = dim - 1 - j;
  std::size_t taken = 0;
  int rank = 0;
  for (int i = s_; i >= 0; --i) {
    while (taken < dim && basis_[order[taken]].degree() >= i) {
      std::size_t j = order[taken++];
      SparseVec img;
      for (std::size_t u = 0; u < mons.size(); ++u) {
        for (const auto& [k, c] : product(mons[u], j)) img.emplace_back(u * dim + k, c);
      }
      if (images.insert(img)) ++rank;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(taken) - rank;
  }
  return out;
}

bool ArtinQuotient::square_property(int d) const {
  auto k = annihilator_filtration(d);
  return k[1] == k[2];
}

}  // namespace apolar
