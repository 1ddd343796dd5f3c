#include "apolar/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

unsigned __int128 abs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

mpz_class mpz_from(__int128 v) {
  unsigned __int128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t common_modulus(const Scalar& a, const Scalar& b) {
  if (a.modulus() != 0 && b.modulus() != 0 && a.modulus() != b.modulus()) {
    throw FieldError("arithmetic between F_" + std::to_string(a.modulus()) + " and F_" +
                     std::to_string(b.modulus()));
  }
  return a.modulus() != 0 ? a.modulus() : b.modulus();
}

}  // namespace

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw Error("division by zero");
  return from_wide(num, den);
}

Scalar Scalar::rational(const mpq_class& q) { return from_mpq(q); }

Scalar Scalar::residue(long long value, std::uint32_t p) {
  Scalar s;
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  s.num_ = r;
  s.mod_ = p;
  return s;
}

Scalar Scalar::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Scalar();
  auto g = gcd128(abs128(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Scalar s;
  if (fits(num) && fits(den)) {
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  mpq_class q(mpz_from(num), mpz_from(den));
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  Scalar s;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n >= -kMax) {
      s.num_ = n;
      s.den_ = d;
      return s;
    }
  }
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::to_residue(std::uint32_t p) const {
  if (mod_ == p) return *this;
  if (mod_ != 0) throw FieldError("cannot coerce a residue into another prime field");
  std::uint64_t n;
  std::uint64_t d;
  if (big_) {
    mpz_class pn = big_->get_num() % p;
    mpz_class pd = big_->get_den() % p;
    if (pn < 0) pn += p;
    n = pn.get_ui();
    d = pd.get_ui();
  } else {
    long long r = num_ % static_cast<long long>(p);
    if (r < 0) r += p;
    n = static_cast<std::uint64_t>(r);
    d = static_cast<std::uint64_t>(den_ % static_cast<long long>(p));
  }
  if (d == 0) {
    throw FieldError("denominator " + to_string() + " is not invertible in F_" + std::to_string(p));
  }
  return residue(static_cast<long long>(n * pow_mod(d, p - 2, p) % p), p);
}

int Scalar::sign() const {
  if (mod_ != 0) return num_ == 0 ? 0 : 1;
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1 || mod_ != 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (mod_ != 0) return residue(static_cast<long long>(pow_mod(num_, mod_ - 2, mod_)), mod_);
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Scalar Scalar::operator-() const {
  if (mod_ != 0) return residue(num_ == 0 ? 0 : mod_ - num_, mod_);
  if (big_) return from_mpq(-*big_);
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (std::uint32_t p = common_modulus(a, b); p != 0) {
    auto x = a.to_residue(p);
    auto y = b.to_residue(p);
    return Scalar::residue((x.num_ + y.num_) % p, p);
  }
  if (a.big_ || b.big_) return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.num_, b.num_, &r) && r >= -kMax) {
      Scalar s;
      s.num_ = r;
      return s;
    }
  }
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Scalar::from_wide(n, d);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (std::uint32_t p = common_modulus(a, b); p != 0) {
    auto x = a.to_residue(p);
    auto y = b.to_residue(p);
    return Scalar::residue(static_cast<long long>(static_cast<std::uint64_t>(x.num_) *
                                                  static_cast<std::uint64_t>(y.num_) % p),
                           p);
  }
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.big_ || b.big_) return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r >= -kMax) {
      Scalar s;
      s.num_ = r;
      return s;
    }
  }
  __int128 n = static_cast<__int128>(a.num_) * b.num_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Scalar::from_wide(n, d);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    std::uint32_t p = common_modulus(a, b);
    return a.to_residue(p).num_ == b.to_residue(p).num_;
  }
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

// ---------------------------------------------------------------------------

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported (the construction divides by 2)");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 3 && (text.substr(0, 3) == "fp:" || text.substr(0, 3) == "FP:")) {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected q or fp:<odd prime>)");
}

Scalar Field::operator()(long long n) const { return p_ == 0 ? Scalar(n) : Scalar::residue(n, p_); }

Scalar Field::operator()(long long num, long long den) const { return coerce(Scalar::rational(num, den)); }

Scalar Field::coerce(const Scalar& s) const {
  if (p_ == 0) {
    if (!s.is_rational()) throw FieldError("cannot lift a residue to the rationals");
    return s;
  }
  return s * Scalar::residue(1, p_);
}

std::string Field::name() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

}  // namespace apolar
