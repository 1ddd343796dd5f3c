#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apolar/hseq.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// Largest truncation bound tried before giving up with NotArtinian.
// APOLAR_TRUNCATION_CEILING overrides the default of 64.
int truncation_ceiling();

struct Division {
  std::vector<Poly> quotients;
  Poly remainder;
};

// f = sum q_j f_j + r modulo terms of degree > N, with no term of r divisible
// by a local leading monomial of a divisor.
Division grauert_divide(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& ord, int N);

// Reduced standard basis of I + m^(N+1), computed below degree N + 1.
std::vector<Poly> truncated_standard_basis(const std::vector<Poly>& gens, const MonomialOrder& ord, int N);

// Minimal monomial generators of the ideal spanned by the given monomials.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons, const MonomialOrder& ord = {});

// An m-primary ideal of K[[x,y]] or K[[x,y,z]]. Construction computes the
// truncation bound, the reduced standard basis and the Hilbert function;
// afterwards the object is read-only.
class Ideal {
 public:
  // hint: a guess for the truncation bound, e.g. socle degree + 1.
  explicit Ideal(std::vector<Poly> generators, std::optional<int> hint = std::nullopt, MonomialOrder ord = {});

  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return ord_; }

  // Smallest N with m^N contained in I.
  int truncation_bound() const { return N_; }
  const std::vector<Poly>& standard_basis() const { return sb_; }
  // Minimal generators of the leading-term ideal.
  const std::vector<Monomial>& leading_terms() const { return lt_; }
  const HSeq& hilbert_function() const { return hf_; }
  int colength() const { return hf_.sum(); }
  int socle_degree() const { return hf_.socle_degree(); }

  bool in_leading_ideal(const Monomial& m) const;
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  std::string to_string() const { return join_polys(gens_); }

 private:
  int nvars_;
  MonomialOrder ord_;
  std::vector<Poly> gens_;
  int N_ = 0;
  std::vector<Poly> sb_;
  std::vector<Monomial> lt_;
  HSeq hf_;
};

std::vector<Poly> standard_basis(const Ideal& I);
HSeq hilbert_function(const Ideal& I);
int truncation_bound(const Ideal& I);

// Coordinates of polynomials over a fixed list of monomials.
SparseVec to_sparse(const Poly& f, const MonomialIndex& index);
Poly poly_from_sparse(const SparseVec& v, const MonomialIndex& index, int nvars);

// The ideal generated by gens (times m when times_m), as a subspace of the
// polynomials of degree <= N. Exact when m^(N+1) lies in that ideal.
RowSpace ideal_span(const std::vector<Poly>& gens, const MonomialIndex& columns, int N, bool times_m = false);

// Greedy minimal generating set chosen from candidates, which must generate an
// ideal containing m^N. Candidates are tried by increasing order, then by
// decreasing local leading monomial.
std::vector<Poly> minimalize(std::vector<Poly> candidates, int N, const MonomialOrder& ord = {});
std::vector<Poly> minimal_generators(const Ideal& I);
int minimal_generator_count(const Ideal& I);
bool is_complete_intersection(const Ideal& I);
bool is_gorenstein(const Ideal& I);
bool same_ideal(const Ideal& a, const Ideal& b);

// J = I n K[[x,y]] for an ideal I of K[[x,y,z]], with minimal generators.
Ideal section_with_S(const Ideal& I);

// A = R/I with the standard monomials as basis.
class ArtinQuotient {
 public:
  explicit ArtinQuotient(const Ideal& I);

  int nvars() const { return nvars_; }
  std::size_t dimension() const { return basis_.size(); }
  int socle_degree() const { return s_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const HSeq& hilbert_function() const { return hf_; }

  // Normal form coordinates of f.
  SparseVec reduce(const Poly& f) const;
  // Coordinates of mu * b_j.
  const SparseVec& product(const Monomial& mu, std::size_t j) const;

  // Entry i = dim ((0 : m^q) n m^i), for i = 0 .. s + 1.
  std::vector<int> annihilator_filtration(int q) const;
  int socle_dimension() const { return annihilator_filtration(1)[0]; }
  // (0 : m^d) n m = (0 : m^d) n m^2.
  bool square_property(int d) const;

 private:
  int nvars_;
  int N_;
  int s_;
  HSeq hf_;
  std::vector<Monomial> basis_;
  MonomialIndex all_;
  std::vector<SparseVec> nf_;
  SparseVec zero_;
};

}  // namespace apolar
