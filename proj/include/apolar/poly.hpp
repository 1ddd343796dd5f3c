#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/scalar.hpp"

namespace apolar {

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

struct Monomial {
  std::array<std::uint16_t, 3> e{};
  std::uint8_t nvars = 3;

  Monomial() = default;
  explicit Monomial(int n) : nvars(static_cast<std::uint8_t>(n)) {}
  Monomial(int a, int b) : e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), 0}, nvars(2) {}
  Monomial(int a, int b, int c)
      : e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)}, nvars(3) {}

  static Monomial variable(int nvars, int i);

  int degree() const { return e[0] + e[1] + e[2]; }
  bool divides(const Monomial& o) const { return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2]; }
  // Requires divides(o).
  Monomial quotient_into(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  std::uint64_t key() const {
    return std::uint64_t{e[0]} | (std::uint64_t{e[1]} << 16U) | (std::uint64_t{e[2]} << 32U);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e && a.nvars == b.nvars; }
  // Storage order: degree, then exponents of x and y. Under the default order
  // this puts the local leading term first.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
    return a.e[1] < b.e[1];
  }

  std::string to_string(bool dual = false) const;
};

// Degree-compatible term order tau and the local order tau-bar derived from it.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, DegLex };

  // degrevlex with z > y > x.
  MonomialOrder() = default;
  // precedence lists variable indices from largest to smallest (0 = x).
  MonomialOrder(Kind kind, std::array<int, 3> precedence) : kind_(kind), prec_(precedence) {}

  // Sign of a - b under tau.
  int compare(const Monomial& a, const Monomial& b) const;
  // Sign of a - b under tau-bar: lower degree is larger.
  int compare_local(const Monomial& a, const Monomial& b) const;
  bool local_greater(const Monomial& a, const Monomial& b) const { return compare_local(a, b) > 0; }

  Kind kind() const { return kind_; }
  const std::array<int, 3>& precedence() const { return prec_; }

 private:
  Kind kind_ = Kind::DegRevLex;
  std::array<int, 3> prec_{2, 1, 0};
};

template <bool Dual>
class PolyT {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit PolyT(int nvars = 3) : nvars_(nvars) {}
  static PolyT monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static PolyT constant(int nvars, const Scalar& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Monomial& m) const;

  // Lowest degree in the support; kInfiniteOrder for 0.
  int order() const { return is_zero() ? kInfiniteOrder : terms_.begin()->first.degree(); }
  // Highest degree in the support; -1 for 0.
  int degree() const { return is_zero() ? -1 : terms_.rbegin()->first.degree(); }

  PolyT homogeneous_part(int d) const;
  PolyT truncated(int max_degree) const;
  PolyT terms_in_degrees(int lo, int hi) const;

  void add_term(const Monomial& m, const Scalar& c);

  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  PolyT& operator*=(const Scalar& c);
  PolyT operator-() const;
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(PolyT a, const Scalar& c) { return a *= c; }
  friend PolyT operator*(const Scalar& c, PolyT a) { return a *= c; }
  friend bool operator==(const PolyT& a, const PolyT& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  // Maps every coefficient into the given field.
  PolyT over(const Field& f) const;

  // Terms sorted for display: ring polynomials by decreasing tau-bar, dual
  // polynomials by decreasing degree then decreasing tau.
  std::vector<std::pair<Monomial, Scalar>> display_terms(const MonomialOrder& ord = {}) const;
  std::string to_string(const MonomialOrder& ord = {}) const;

 private:
  void check_arity(const PolyT& o) const;

  int nvars_;
  Terms terms_;
};

using Poly = PolyT<false>;
using DualPoly = PolyT<true>;

extern template class PolyT<false>;
extern template class PolyT<true>;

Poly operator*(const Poly& a, const Poly& b);
Poly multiply(const Poly& a, const Poly& b, int max_degree);
Poly multiply(const Poly& a, const Monomial& m, const Scalar& c, int max_degree);
Poly power(const Poly& a, int k, int max_degree);
Poly variable(int nvars, int i);

Poly initial_form(const Poly& f);
Monomial leading_monomial_local(const Poly& f, const MonomialOrder& ord = {});
Scalar leading_coeff_local(const Poly& f, const MonomialOrder& ord = {});

// f(images[0], images[1], images[2]) truncated above max_degree.
Poly substitute(const Poly& f, const std::vector<Poly>& images, int max_degree);
// Drops the third variable from a polynomial free of it (R -> S), or embeds S in R.
Poly to_two_vars(const Poly& f);
Poly to_three_vars(const Poly& f);
DualPoly to_two_vars(const DualPoly& f);
DualPoly to_three_vars(const DualPoly& f);

Poly parse_poly(std::string_view text, int nvars, const Field& field = Field());
DualPoly parse_dual(std::string_view text, int nvars, const Field& field = Field());
// Semicolon-separated generators.
std::vector<Poly> parse_poly_list(std::string_view text, int nvars, const Field& field = Field());
std::vector<DualPoly> parse_dual_list(std::string_view text, int nvars, const Field& field = Field());
std::string join_polys(const std::vector<Poly>& gens);

std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_up_to(int nvars, int max_degree);

// Dense numbering of a fixed set of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  // -1 when absent.
  long find(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace apolar
