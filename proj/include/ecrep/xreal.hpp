#pragma once

// Extended-precision real and complex scalars.
//
// XReal owns an mpfr_t. Each value carries its own mantissa width; binary
// operations round to the wider of the two operands, so mixing precisions
// never silently loses bits. All operations round to nearest.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace ecrep {

using BigInt = mpz_class;
using Rational = mpq_class;

class XReal {
 public:
  explicit XReal(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits), mpfr_set_zero(v_, 1); }
  XReal(long value, mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_si(v_, value, MPFR_RNDN); }
  XReal(int value, mpfr_prec_t bits) : XReal(static_cast<long>(value), bits) {}
  XReal(double value, mpfr_prec_t bits) { mpfr_init2(v_, bits), mpfr_set_d(v_, value, MPFR_RNDN); }
  XReal(const BigInt& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  XReal(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  XReal(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rnd) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), rnd);
  }
  // Rounds `other` to `bits`.
  XReal(const XReal& other, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  XReal(const XReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  XReal(XReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  XReal& operator=(const XReal& other) {
    if (this != &other) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  XReal& operator=(XReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~XReal() { mpfr_clear(v_); }

  friend void swap(XReal& a, XReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

  static XReal pi(mpfr_prec_t bits);
  /// 2^exponent, exact.
  static XReal pow2(long exponent, mpfr_prec_t bits);
  /// Parses a decimal string; throws DomainError on malformed input.
  static XReal parse(const std::string& text, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  BigInt round_to_integer() const;
  BigInt floor_to_integer() const;

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  /// Serialization at ceil(precision * 0.302) significant digits.
  std::string serialize() const;

  XReal& operator+=(const XReal& o);
  XReal& operator-=(const XReal& o);
  XReal& operator*=(const XReal& o);
  XReal& operator/=(const XReal& o);
  XReal& operator+=(long o);
  XReal& operator-=(long o);
  XReal& operator*=(long o);
  XReal& operator/=(long o);

  XReal operator-() const;

  friend XReal operator+(XReal a, const XReal& b) { return a += b; }
  friend XReal operator-(XReal a, const XReal& b) { return a -= b; }
  friend XReal operator*(XReal a, const XReal& b) { return a *= b; }
  friend XReal operator/(XReal a, const XReal& b) { return a /= b; }
  friend XReal operator+(XReal a, long b) { return a += b; }
  friend XReal operator-(XReal a, long b) { return a -= b; }
  friend XReal operator*(XReal a, long b) { return a *= b; }
  friend XReal operator/(XReal a, long b) { return a /= b; }
  friend XReal operator+(long a, XReal b) { return b += a; }
  friend XReal operator*(long a, XReal b) { return b *= a; }
  friend XReal operator-(long a, const XReal& b);
  friend XReal operator/(long a, const XReal& b);

  friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const XReal& a, long b);

 private:
  mpfr_t v_;
};

XReal abs(XReal x);
XReal sqrt(XReal x);
XReal exp(XReal x);
XReal expm1(XReal x);
XReal log(XReal x);
XReal log1p(XReal x);
XReal log2(XReal x);
XReal sin(XReal x);
XReal cos(XReal x);
XReal atan2(const XReal& y, const XReal& x);
XReal lgamma(XReal x);
XReal floor(XReal x);
XReal ceil(XReal x);
XReal pow(XReal base, long exponent);
XReal pow(const XReal& base, const XReal& exponent);
/// x * 2^e, exact.
XReal ldexp(XReal x, long e);
const XReal& max(const XReal& a, const XReal& b);

struct XComplex {
  XReal re;
  XReal im;

  XComplex() = default;
  explicit XComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  friend void swap(XComplex& a, XComplex& b) noexcept {
    swap(a.re, b.re);
    swap(a.im, b.im);
  }

  XComplex& operator+=(const XComplex& o) { return re += o.re, im += o.im, *this; }
  XComplex& operator-=(const XComplex& o) { return re -= o.re, im -= o.im, *this; }
  XComplex& operator*=(const XComplex& o);
  XComplex& operator*=(const XReal& s) { return re *= s, im *= s, *this; }
  XComplex& operator/=(const XReal& s) { return re /= s, im /= s, *this; }

  friend XComplex operator+(XComplex a, const XComplex& b) { return a += b; }
  friend XComplex operator-(XComplex a, const XComplex& b) { return a -= b; }
  friend XComplex operator*(XComplex a, const XComplex& b) { return a *= b; }
  friend bool operator==(const XComplex& a, const XComplex& b) { return a.re == b.re && a.im == b.im; }

  XComplex conj() const { return {re, -im}; }
  /// re^2 + im^2 with a single rounding.
  XReal norm() const;
  XReal abs() const;
  XReal arg() const { return atan2(im, re); }
  /// Scales to unit modulus; the argument is unchanged.
  void normalize();

  /// "re|im" pair, each at its serialization width.
  std::string serialize() const;
  static XComplex parse(const std::string& text, mpfr_prec_t bits);
};

/// out = a * b; `out` must not alias `a` or `b`. No allocation once `out`
/// has the right precision, which is what the power loops rely on.
void multiply_into(XComplex& out, const XComplex& a, const XComplex& b);

/// base^exponent by binary exponentiation, renormalizing to unit modulus
/// every `renorm_every` multiplications (0 disables). Intended for points
/// on the unit circle.
XComplex unit_pow(const XComplex& base, std::uint64_t exponent, unsigned renorm_every = 16);

}  // namespace ecrep
