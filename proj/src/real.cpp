#include "riesz/real.hpp"

#include <utility>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

void PrecisionContext::validate() const {
  if (precision_bits < kMinBits) {
    throw InvalidArgument("precision_bits must be >= 64, got " + std::to_string(precision_bits));
  }
  if (max_terms == 0) {
    throw InvalidArgument("max_terms must be positive");
  }
}

PrecisionContext PrecisionContext::at_least(unsigned bits) const {
  PrecisionContext out = *this;
  if (out.precision_bits < bits) out.precision_bits = bits;
  return out;
}

PrecisionContext PrecisionContext::with_bits(unsigned bits) const {
  PrecisionContext out = *this;
  out.precision_bits = bits;
  return out;
}

// ---------------------------------------------------------------- Real

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) {
  return static_cast<mpfr_prec_t>(a.precision() > b.precision() ? a.precision() : b.precision());
}

}  // namespace

Real::Real() { mpfr_init2(v_, PrecisionContext::kDefaultBits); }

Real::Real(unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(long value, unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(std::string_view decimal, unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  const std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == nullptr || *end != '\0') {
    mpfr_clear(v_);
    throw InvalidArgument("not a decimal number: '" + text + "'");
  }
}

Real::Real(const Real& other, unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(unsigned bits) {
  Real out(bits);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

Real Real::exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.v_, x.v_, MPFR_RNDN);
  return out;
}

Real Real::log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.v_, x.v_, MPFR_RNDN);
  return out;
}

Real Real::pow(const Real& base, const Real& exponent) {
  Real out(static_cast<unsigned>(wider(base, exponent)));
  mpfr_pow(out.v_, base.v_, exponent.v_, MPFR_RNDN);
  return out;
}

Real Real::pow(const Real& base, unsigned long exponent) {
  Real out(base.precision());
  mpfr_pow_ui(out.v_, base.v_, exponent, MPFR_RNDN);
  return out;
}

Real Real::ui_pow(unsigned long n, const Real& exponent) {
  Real out(exponent.precision());
  mpfr_ui_pow(out.v_, n, exponent.v_, MPFR_RNDN);
  return out;
}

Real Real::lgamma(const Real& x) {
  Real out(x.precision());
  int sign = 0;
  mpfr_lgamma(out.v_, &sign, x.v_, MPFR_RNDN);
  return out;
}

Real Real::gamma(const Real& x) {
  Real out(x.precision());
  mpfr_gamma(out.v_, x.v_, MPFR_RNDN);
  return out;
}

Real Real::sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
  return out;
}

Real Real::abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.v_, x.v_, MPFR_RNDN);
  return out;
}

long Real::exponent2() const {
  if (!mpfr_regular_p(v_)) return 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Real& Real::operator+=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::mul_ui(unsigned long rhs) {
  mpfr_mul_ui(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::div_ui(unsigned long rhs) {
  mpfr_div_ui(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::mul_2exp(long e) {
  mpfr_mul_2si(v_, v_, e, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real out(x.precision());
  mpfr_neg(out.v_, x.v_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(static_cast<unsigned>(wider(a, b)));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(static_cast<unsigned>(wider(a, b)));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(static_cast<unsigned>(wider(a, b)));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(static_cast<unsigned>(wider(a, b)));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

// ------------------------------------------------------------- Complex

Real Complex::norm() const { return re * re + im * im; }

Real Complex::abs() const {
  Real out(precision());
  mpfr_hypot(out.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return out;
}

Real Complex::arg() const {
  Real out(precision());
  mpfr_atan2(out.raw(), im.raw(), re.raw(), MPFR_RNDN);
  return out;
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  Real i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real d = rhs.norm();
  Real r = (re * rhs.re + im * rhs.im) / d;
  Real i = (im * rhs.re - re * rhs.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

}  // namespace riesz
