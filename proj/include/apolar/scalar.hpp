#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apolar {

// Exact field element: either a rational number in lowest terms or a residue
// modulo an odd prime p.
//
// Rationals whose numerator and denominator fit in 64 bits are stored inline;
// larger values spill into a shared, immutable GMP rational. Arithmetic between
// a rational and a residue coerces the rational into F_p, so integer constants
// such as Scalar(2) work in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : num_(n) {}        // NOLINT(google-explicit-constructor)

  static Scalar rational(long long num, long long den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(long long value, std::uint32_t p);

  bool is_zero() const { return big_ == nullptr && num_ == 0; }
  bool is_one() const { return big_ == nullptr && num_ == 1 && den_ == 1; }
  bool is_rational() const { return mod_ == 0; }
  std::uint32_t modulus() const { return mod_; }

  // Sign of a rational; residues report 0 or 1.
  int sign() const;
  bool is_integer() const { return mod_ != 0 || (big_ == nullptr ? den_ == 1 : big_->get_den() == 1); }

  mpq_class to_mpq() const;
  std::string to_string() const;

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  static Scalar from_wide(__int128 num, __int128 den);
  static Scalar from_mpq(mpq_class q);
  Scalar to_residue(std::uint32_t p) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t mod_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

// The coefficient field of a computation: Q (default) or F_p for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  // Throws FieldError for p = 2 and for non-primes.
  static Field prime(std::uint32_t p);
  // Accepts "q" / "Q" or "fp:<odd prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar operator()(long long n) const;
  Scalar operator()(long long num, long long den) const;
  // Maps a rational scalar into this field.
  Scalar coerce(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

}  // namespace apolar
