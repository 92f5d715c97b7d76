#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ezl {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Failure categories surfaced by every module. The CLI maps these to exit codes.
enum class ErrorKind {
  PoleAt1,
  PrecisionUnreachable,
  OutOfDomain,
  TargetAbsent,
  TargetAmbiguous,
  NotPositive,
  RegionViolation,
  OnSingularHyperplane,
  OrderCapExceeded,
  InvalidApproach,
  UnsupportedCenter,
  ConsistencyFailure,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Requested accuracy. `digits` significant decimals; the relative tolerance
/// every public operation targets is 10^(5-digits).
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 30;
  static constexpr int kMinDigits = 15;
  static constexpr int kGuardDigits = 15;

  explicit PrecisionContext(int digits = kDefaultDigits);

  int digits() const noexcept { return digits_; }
  /// Decimal digits actually carried in arithmetic (digits + guard).
  int working_digits() const noexcept { return digits_ + kGuardDigits; }
  Real tol() const;
  /// Tolerance used internally, a few digits below tol().
  Real inner_tol() const;

  /// Default digits honouring the EZL_DIGITS environment variable.
  static PrecisionContext from_env();

 private:
  int digits_;
};

/// Sets the MPFR default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(int decimal_digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

Real pi();
Real real_from_string(const std::string& text);
/// Decimal string with `digits` significant digits, scientific notation.
std::string to_decimal(const Real& x, int digits);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(int r) : re(r), im(0) {}          // NOLINT(google-explicit-constructor)
  Complex(double r) : re(r), im(0) {}       // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r, double i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    if (o.im == 0) {
      return *this *= o.re;
    }
    if (im == 0) {
      im = re * o.im;
      re *= o.re;
      return *this;
    }
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
  }
  Complex& operator/=(const Complex& o);
  Complex& operator/=(const Real& o) {
    re /= o;
    im /= o;
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }

  bool is_zero() const { return re == 0 && im == 0; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& b) { return a *= b; }
inline Complex operator*(const Real& b, Complex a) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(Complex a, const Real& b) { return a /= b; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// base^z for real positive base.
Complex pow(const Real& base, const Complex& z);
/// n^z with log n cached per working precision.
Complex pow(int base, const Complex& z);
/// log n at the working precision, cached per thread.
const Real& log_integer(int n);
/// Integer power by repeated squaring.
Complex ipow(Complex z, int n);
Complex polar(const Real& r, const Real& theta);
/// 1/z; throws on zero.
Complex reciprocal(const Complex& z);

/// Nearest integer when z is real and integral, else nullopt-like flag.
bool is_integer(const Complex& z, long& value);

std::string to_string(const Complex& z, int digits);

using ComplexPoint = std::vector<Complex>;
using IntPoint = std::vector<int>;
using MultiIndex = std::vector<int>;

ComplexPoint to_complex_point(const IntPoint& m);

/// Copies carrying the current default precision (mpfr values otherwise keep
/// the precision they were created with).
Real rescaled(const Real& x);
Complex rescaled(const Complex& z);
ComplexPoint rescaled(const ComplexPoint& s);

/// Exact rational constants.
Real binomial_real(int n, int k);
Real factorial_real(int n);

}  // namespace ezl
