#include "apolar/poly.hpp"

#include <algorithm>
#include <cctype>

namespace apolar {

namespace {

constexpr int kMaxExponent = 4096;

char var_name(int i, bool dual) {
  static constexpr char kLower[] = {'x', 'y', 'z'};
  static constexpr char kUpper[] = {'X', 'Y', 'Z'};
  return dual ? kUpper[i] : kLower[i];
}

std::string format_term(const Scalar& c, const Monomial& m, bool dual) {
  if (m.degree() == 0) return c.to_string();
  std::string mono = m.to_string(dual);
  if (c.is_one()) return mono;
  if (c == Scalar(-1) && c.is_rational()) return "-" + mono;
  return c.to_string() + mono;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int nvars, int i) {
  Monomial m(nvars);
  m.e[static_cast<std::size_t>(i)] = 1;
  return m;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
  Monomial q(nvars);
  for (std::size_t i = 0; i < 3; ++i) q.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
  return q;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial l(nvars);
  for (std::size_t i = 0; i < 3; ++i) l.e[i] = std::max(e[i], o.e[i]);
  return l;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars != b.nvars) throw ArityMismatch("monomials over different rings");
  Monomial m(a.nvars);
  for (std::size_t i = 0; i < 3; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return m;
}

std::string Monomial::to_string(bool dual) const {
  if (degree() == 0) return "1";
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    auto k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    out += var_name(i, dual);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  if (kind_ == Kind::DegRevLex) {
    for (int k = 2; k >= 0; --k) {
      auto v = static_cast<std::size_t>(prec_[static_cast<std::size_t>(k)]);
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
  } else {
    for (int k = 0; k < 3; ++k) {
      auto v = static_cast<std::size_t>(prec_[static_cast<std::size_t>(k)]);
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
  }
  return 0;
}

int MonomialOrder::compare_local(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  return compare(a, b);
}

// ---------------------------------------------------------------------------
// PolyT

template <bool Dual>
PolyT<Dual> PolyT<Dual>::monomial(const Monomial& m, const Scalar& c) {
  PolyT p(m.nvars);
  p.add_term(m, c);
  return p;
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::constant(int nvars, const Scalar& c) {
  return monomial(Monomial(nvars), c);
}

template <bool Dual>
Scalar PolyT<Dual>::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::homogeneous_part(int d) const {
  return terms_in_degrees(d, d);
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::truncated(int max_degree) const {
  return terms_in_degrees(0, max_degree);
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::terms_in_degrees(int lo, int hi) const {
  PolyT out(nvars_);
  for (const auto& [m, c] : terms_) {
    int d = m.degree();
    if (d > hi) break;
    if (d >= lo) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

template <bool Dual>
void PolyT<Dual>::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars != nvars_) throw ArityMismatch("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <bool Dual>
void PolyT<Dual>::check_arity(const PolyT& o) const {
  if (o.nvars_ != nvars_) {
    throw ArityMismatch("operands have " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                        " variables");
  }
}

template <bool Dual>
PolyT<Dual>& PolyT<Dual>::operator+=(const PolyT& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <bool Dual>
PolyT<Dual>& PolyT<Dual>::operator-=(const PolyT& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

template <bool Dual>
PolyT<Dual>& PolyT<Dual>::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::operator-() const {
  PolyT out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

template <bool Dual>
PolyT<Dual> PolyT<Dual>::over(const Field& f) const {
  PolyT out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, f.coerce(c));
  return out;
}

template <bool Dual>
std::vector<std::pair<Monomial, Scalar>> PolyT<Dual>::display_terms(const MonomialOrder& ord) const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if constexpr (Dual) {
      int da = a.first.degree();
      int db = b.first.degree();
      if (da != db) return da > db;
      return ord.compare(a.first, b.first) > 0;
    } else {
      return ord.compare_local(a.first, b.first) > 0;
    }
  });
  return out;
}

template <bool Dual>
std::string PolyT<Dual>::to_string(const MonomialOrder& ord) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_terms(ord)) {
    if (first) {
      out = format_term(c, m, Dual);
      first = false;
    } else if (c.is_rational() && c.sign() < 0) {
      out += " - " + format_term(-c, m, Dual);
    } else {
      out += " + " + format_term(c, m, Dual);
    }
  }
  return out;
}

template class PolyT<false>;
template class PolyT<true>;

// ---------------------------------------------------------------------------
// Ring arithmetic

Poly operator*(const Poly& a, const Poly& b) {
  return multiply(a, b, std::numeric_limits<int>::max());
}

Poly multiply(const Poly& a, const Poly& b, int max_degree) {
  if (a.nvars() != b.nvars()) throw ArityMismatch("product of polynomials over different rings");
  Poly out(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() + b.order() > max_degree) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > max_degree) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Poly multiply(const Poly& a, const Monomial& m, const Scalar& c, int max_degree) {
  Poly out(a.nvars());
  if (c.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() + m.degree() > max_degree) break;
    out.add_term(ma * m, ca * c);
  }
  return out;
}

Poly power(const Poly& a, int k, int max_degree) {
  Poly out = Poly::constant(a.nvars(), 1);
  for (int i = 0; i < k; ++i) out = multiply(out, a, max_degree);
  return out;
}

Poly variable(int nvars, int i) { return Poly::monomial(Monomial::variable(nvars, i)); }

Poly initial_form(const Poly& f) {
  if (f.is_zero()) throw PreconditionFailed("initial form of the zero polynomial");
  return f.homogeneous_part(f.order());
}

Monomial leading_monomial_local(const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw PreconditionFailed("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  int d = f.order();
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != d) break;
    if (best == nullptr || ord.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

Scalar leading_coeff_local(const Poly& f, const MonomialOrder& ord) {
  return f.coeff(leading_monomial_local(f, ord));
}

Poly substitute(const Poly& f, const std::vector<Poly>& images, int max_degree) {
  if (static_cast<int>(images.size()) != f.nvars()) throw ArityMismatch("substitution needs one image per variable");
  int target_vars = images.empty() ? f.nvars() : images.front().nvars();
  std::vector<std::vector<Poly>> powers(images.size());
  auto pow_of = [&](std::size_t v, int k) -> const Poly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Poly::constant(target_vars, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(multiply(pw.back(), images[v], max_degree));
    return pw[static_cast<std::size_t>(k)];
  };
  Poly out(target_vars);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(target_vars, c);
    for (std::size_t v = 0; v < images.size() && !t.is_zero(); ++v) {
      if (m.e[v] > 0) t = multiply(t, pow_of(v, m.e[v]), max_degree);
    }
    out += t;
  }
  return out;
}

namespace {

template <bool Dual>
PolyT<Dual> change_arity(const PolyT<Dual>& f, int nvars) {
  PolyT<Dual> out(nvars);
  for (const auto& [m, c] : f.terms()) {
    if (nvars == 2 && m.e[2] != 0) throw ArityMismatch("polynomial involves the third variable");
    Monomial n(nvars);
    n.e = m.e;
    out.add_term(n, c);
  }
  return out;
}

}  // namespace

Poly to_two_vars(const Poly& f) { return change_arity(f, 2); }
Poly to_three_vars(const Poly& f) { return change_arity(f, 3); }
DualPoly to_two_vars(const DualPoly& f) { return change_arity(f, 2); }
DualPoly to_three_vars(const DualPoly& f) { return change_arity(f, 3); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, bool dual, std::size_t offset)
      : text_(text), nvars_(nvars), dual_(dual), offset_(offset) {}

  std::vector<std::pair<Monomial, Scalar>> parse() {
    std::vector<std::pair<Monomial, Scalar>> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (accept_sign(negative)) skip_ws();
    for (;;) {
      auto t = parse_term();
      if (negative) t.second = -t.second;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (!accept_sign(negative)) fail(std::string("unexpected character '") + text_[pos_] + "'");
      skip_ws();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

  bool accept_sign(bool& negative) {
    if (at_end()) return false;
    if (text_[pos_] == '+') {
      negative = false;
      ++pos_;
      return true;
    }
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      negative = true;
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  bool peek_letter() const { return !at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_])); }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Monomial, Scalar> parse_term() {
    Scalar coeff(1);
    bool have_coeff = false;
    if (peek_digit()) {
      mpz_class num = parse_integer();
      mpz_class den(1);
      skip_ws();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) throw ParseError(offset_ + at, "zero denominator");
      }
      coeff = Scalar::rational(mpq_class(num, den));
      have_coeff = true;
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!peek_letter()) fail("expected a variable after '*'");
      }
    }
    Monomial m(nvars_);
    bool have_mono = false;
    while (peek_letter()) {
      parse_factor(m);
      have_mono = true;
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!peek_letter()) fail("expected a variable after '*'");
      }
    }
    if (!have_coeff && !have_mono) {
      if (at_end()) fail("expected a term");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return {m, coeff};
  }

  void parse_factor(Monomial& m) {
    char c = text_[pos_];
    int v = -1;
    for (int i = 0; i < 3; ++i) {
      if (c == var_name(i, dual_)) v = i;
    }
    if (v < 0) {
      fail(std::string("unknown variable '") + c + "' (expected " + (dual_ ? "X, Y, Z" : "x, y, z") + ")");
    }
    if (v >= nvars_) {
      fail(std::string("variable ") + c + " not in ring of " + std::to_string(nvars_) + " variables");
    }
    ++pos_;
    int exp = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = parse_integer();
      if (e > kMaxExponent) throw ParseError(offset_ + at, "exponent too large");
      exp = static_cast<int>(e.get_si());
    }
    int total = m.e[static_cast<std::size_t>(v)] + exp;
    if (total > kMaxExponent) fail("exponent too large");
    m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(total);
  }

  std::string_view text_;
  int nvars_;
  bool dual_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

template <bool Dual>
PolyT<Dual> parse_impl(std::string_view text, int nvars, const Field& field, std::size_t offset) {
  if (nvars != 2 && nvars != 3) throw ArityMismatch("only 2 or 3 variables are supported");
  PolyT<Dual> p(nvars);
  for (const auto& [m, c] : Parser(text, nvars, Dual, offset).parse()) p.add_term(m, field.coerce(c));
  return p;
}

template <bool Dual>
std::vector<PolyT<Dual>> parse_list_impl(std::string_view text, int nvars, const Field& field) {
  std::vector<PolyT<Dual>> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find_first_of(";,", start);
    auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(parse_impl<Dual>(piece, nvars, field, start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, int nvars, const Field& field) {
  return parse_impl<false>(text, nvars, field, 0);
}

DualPoly parse_dual(std::string_view text, int nvars, const Field& field) {
  return parse_impl<true>(text, nvars, field, 0);
}

std::vector<Poly> parse_poly_list(std::string_view text, int nvars, const Field& field) {
  return parse_list_impl<false>(text, nvars, field);
}

std::vector<DualPoly> parse_dual_list(std::string_view text, int nvars, const Field& field) {
  return parse_list_impl<true>(text, nvars, field);
}

std::string join_polys(const std::vector<Poly>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += "; ";
    out += gens[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial enumeration

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 2) {
    for (int a = 0; a <= d; ++a) out.emplace_back(a, d - a);
  } else {
    for (int a = 0; a <= d; ++a) {
      for (int b = 0; b <= d - a; ++b) out.emplace_back(a, b, d - a - b);
    }
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].key(), i);
}

long MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

}  // namespace apolar
