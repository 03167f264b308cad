#include "ecrep/xreal.hpp"

#include <cmath>
#include <memory>

#include "ecrep/error.hpp"

namespace ecrep {

namespace {

mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) { return std::max(mpfr_get_prec(a), mpfr_get_prec(b)); }

// Widens `x` in place (keeping its value) when `other` is wider.
void widen_for(mpfr_ptr x, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(x)) mpfr_prec_round(x, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::UnsupportedArgument: return "UnsupportedArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TruncationFailure: return "TruncationFailure";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::AdmissibilityError: return "AdmissibilityError";
    case ErrorKind::BranchError: return "BranchError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

XReal XReal::pi(mpfr_prec_t bits) {
  XReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

XReal XReal::pow2(long exponent, mpfr_prec_t bits) {
  XReal r(1L, bits);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

XReal XReal::parse(const std::string& text, mpfr_prec_t bits) {
  XReal r(bits);
  if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorKind::DomainError, "malformed decimal '" + text + "'");
  }
  return r;
}

BigInt XReal::round_to_integer() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDNA);
  return out;
}

BigInt XReal::floor_to_integer() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
  return out;
}

std::string XReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  // mpfr_asprintf handles arbitrary widths; free with mpfr_free_str.
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
  std::unique_ptr<char, void (*)(char*)> holder(raw, [](char* s) { mpfr_free_str(s); });
  return std::string(raw);
}

std::string XReal::serialize() const {
  return to_string(static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.302)));
}

XReal& XReal::operator+=(const XReal& o) {
  widen_for(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator-=(const XReal& o) {
  widen_for(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator*=(const XReal& o) {
  widen_for(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator/=(const XReal& o) {
  widen_for(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
XReal& XReal::operator+=(long o) { return mpfr_add_si(v_, v_, o, MPFR_RNDN), *this; }
XReal& XReal::operator-=(long o) { return mpfr_sub_si(v_, v_, o, MPFR_RNDN), *this; }
XReal& XReal::operator*=(long o) { return mpfr_mul_si(v_, v_, o, MPFR_RNDN), *this; }
XReal& XReal::operator/=(long o) { return mpfr_div_si(v_, v_, o, MPFR_RNDN), *this; }

XReal XReal::operator-() const {
  XReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

XReal operator-(long a, const XReal& b) {
  XReal r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

XReal operator/(long a, const XReal& b) {
  XReal r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const XReal& a, const XReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const XReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define ECREP_UNARY(name, fn)          \
  XReal name(XReal x) {                \
    fn(x.get(), x.get(), MPFR_RNDN);   \
    return x;                          \
  }
ECREP_UNARY(abs, mpfr_abs)
ECREP_UNARY(sqrt, mpfr_sqrt)
ECREP_UNARY(exp, mpfr_exp)
ECREP_UNARY(expm1, mpfr_expm1)
ECREP_UNARY(log, mpfr_log)
ECREP_UNARY(log1p, mpfr_log1p)
ECREP_UNARY(log2, mpfr_log2)
ECREP_UNARY(sin, mpfr_sin)
ECREP_UNARY(cos, mpfr_cos)
#undef ECREP_UNARY

XReal lgamma(XReal x) {
  int sign = 0;
  mpfr_lgamma(x.get(), &sign, x.get(), MPFR_RNDN);
  return x;
}

XReal floor(XReal x) {
  mpfr_floor(x.get(), x.get());
  return x;
}

XReal ceil(XReal x) {
  mpfr_ceil(x.get(), x.get());
  return x;
}

XReal atan2(const XReal& y, const XReal& x) {
  XReal r(wider(y.get(), x.get()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

XReal pow(XReal base, long exponent) {
  mpfr_pow_si(base.get(), base.get(), exponent, MPFR_RNDN);
  return base;
}

XReal pow(const XReal& base, const XReal& exponent) {
  XReal r(wider(base.get(), exponent.get()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

XReal ldexp(XReal x, long e) {
  mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
  return x;
}

const XReal& max(const XReal& a, const XReal& b) { return (a < b) ? b : a; }

XComplex& XComplex::operator*=(const XComplex& o) {
  XComplex out(std::max(precision(), o.precision()));
  multiply_into(out, *this, o);
  return *this = std::move(out);
}

XReal XComplex::norm() const {
  XReal r(precision());
  mpfr_fmma(r.get(), re.get(), re.get(), im.get(), im.get(), MPFR_RNDN);
  return r;
}

XReal XComplex::abs() const { return sqrt(norm()); }

void XComplex::normalize() {
  const XReal m = abs();
  re /= m;
  im /= m;
}

std::string XComplex::serialize() const { return re.serialize() + "|" + im.serialize(); }

XComplex XComplex::parse(const std::string& text, mpfr_prec_t bits) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw Error(ErrorKind::DomainError, "complex value needs 're|im' form");
  return {XReal::parse(text.substr(0, bar), bits), XReal::parse(text.substr(bar + 1), bits)};
}

void multiply_into(XComplex& out, const XComplex& a, const XComplex& b) {
  mpfr_fmms(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(out.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
}

XComplex unit_pow(const XComplex& base, std::uint64_t exponent, unsigned renorm_every) {
  const mpfr_prec_t bits = base.precision();
  XComplex result(XReal(1L, bits), XReal(bits));
  XComplex square = base;
  XComplex scratch(bits);
  unsigned since_renorm = 0;
  auto tick = [&](XComplex& z) {
    if (renorm_every != 0 && ++since_renorm >= renorm_every) {
      z.normalize();
      since_renorm = 0;
    }
  };
  while (exponent != 0) {
    if (exponent & 1U) {
      multiply_into(scratch, result, square);
      swap(result, scratch);
      tick(result);
    }
    exponent >>= 1U;
    if (exponent != 0) {
      multiply_into(scratch, square, square);
      swap(square, scratch);
      tick(square);
    }
  }
  return result;
}

}  // namespace ecrep
