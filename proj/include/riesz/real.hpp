// Arbitrary-precision real and complex values backed by MPFR.
//
// Every value carries its own mantissa width. Binary operators produce a
// result at the wider of the two operand precisions and round to nearest,
// so a computation started from values created under one PrecisionContext
// stays at that precision throughout.
#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace riesz {

/// Working precision for all arbitrary-precision arithmetic.
///
/// Every arithmetic step is correctly rounded to nearest by MPFR, so the
/// per-step relative error is at most 2^(1 - precision_bits).
struct PrecisionContext {
  static constexpr unsigned kMinBits = 64;
  static constexpr unsigned kDefaultBits = 256;

  unsigned precision_bits = kDefaultBits;
  /// Cap on series terms (zeta direct terms, psi terms).
  std::uint64_t max_terms = 4'000'000;

  /// Throws InvalidArgument when precision_bits < 64 or max_terms == 0.
  void validate() const;

  /// Same context with precision raised to at least `bits`.
  [[nodiscard]] PrecisionContext at_least(unsigned bits) const;
  [[nodiscard]] PrecisionContext with_bits(unsigned bits) const;
};

class Real {
 public:
  Real();  // NaN at the default precision
  explicit Real(unsigned bits);
  Real(double value, unsigned bits);
  Real(long value, unsigned bits);
  Real(int value, unsigned bits) : Real(static_cast<long>(value), bits) {}
  Real(std::string_view decimal, unsigned bits);
  /// Copy of `other` rounded to `bits`.
  Real(const Real& other, unsigned bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(unsigned bits);
  static Real exp(const Real& x);
  static Real log(const Real& x);
  static Real pow(const Real& base, const Real& exponent);
  static Real pow(const Real& base, unsigned long exponent);
  /// n^x for an unsigned integer base.
  static Real ui_pow(unsigned long n, const Real& exponent);
  static Real lgamma(const Real& x);  // log |Gamma(x)|
  static Real gamma(const Real& x);
  static Real sqrt(const Real& x);
  static Real abs(const Real& x);

  [[nodiscard]] unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; 0 for zero.
  [[nodiscard]] long exponent2() const;
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Decimal in scientific notation with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits = 30) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& mul_ui(unsigned long rhs);
  Real& div_ui(unsigned long rhs);
  /// Multiplies by 2^e exactly.
  Real& mul_2exp(long e);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  mpfr_ptr raw() { return v_; }
  [[nodiscard]] mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// Complex value as a pair of reals at a shared precision.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(unsigned bits) : re(0L, bits), im(0L, bits) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(double real, double imag, unsigned bits) : re(real, bits), im(imag, bits) {}

  [[nodiscard]] unsigned precision() const { return re.precision(); }
  [[nodiscard]] Real abs() const;
  [[nodiscard]] Real norm() const;  // re^2 + im^2
  [[nodiscard]] Real arg() const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

}  // namespace riesz
