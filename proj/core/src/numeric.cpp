#include "ezl/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace ezl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAt1: return "PoleAt1";
    case ErrorKind::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::TargetAbsent: return "TargetAbsent";
    case ErrorKind::TargetAmbiguous: return "TargetAmbiguous";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::RegionViolation: return "RegionViolation";
    case ErrorKind::OnSingularHyperplane: return "OnSingularHyperplane";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InvalidApproach: return "InvalidApproach";
    case ErrorKind::UnsupportedCenter: return "UnsupportedCenter";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw Error(ErrorKind::InvalidArgument,
                "digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
}

Real PrecisionContext::tol() const {
  return pow(Real(10), 5 - digits_);
}

Real PrecisionContext::inner_tol() const {
  return pow(Real(10), -digits_ - 3);
}

PrecisionContext PrecisionContext::from_env() {
  if (const char* env = std::getenv("EZL_DIGITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      throw Error(ErrorKind::InvalidArgument, std::string("EZL_DIGITS is not an integer: ") + env);
    }
    return PrecisionContext(static_cast<int>(v));
  }
  return PrecisionContext();
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_digits()) {}

PrecisionScope::PrecisionScope(int decimal_digits) : previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(decimal_digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real real_from_string(const std::string& text) {
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  }
}

std::string to_decimal(const Real& x, int digits) {
  if (x == 0) {
    return "0";
  }
  return x.str(digits, std::ios_base::scientific);
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    Real ratio = o.im / o.re;
    Real den = o.re + o.im * ratio;
    Real r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = std::move(r);
  } else {
    Real ratio = o.re / o.im;
    Real den = o.re * ratio + o.im;
    Real r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = std::move(r);
  }
  return *this;
}

Real abs(const Complex& z) {
  if (z.im == 0) {
    return boost::multiprecision::abs(z.re);
  }
  Real out;
  mpfr_hypot(out.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
  return out;
}
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  if (z.im == 0) {
    return {m, Real(0)};
  }
  Real c;
  Real s;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), z.im.backend().data(), MPFR_RNDN);
  return {m * c, m * s};
}

Complex log(const Complex& z) {
  return {boost::multiprecision::log(abs(z)), arg(z)};
}

Complex sin(const Complex& z) {
  return {boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
          boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im)};
}

Complex cos(const Complex& z) {
  return {boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
          -boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im)};
}

Complex pow(const Real& base, const Complex& z) {
  Real lb = boost::multiprecision::log(base);
  return exp(Complex(z.re * lb, z.im * lb));
}

const Real& log_integer(int n) {
  thread_local std::map<unsigned, std::vector<Real>> cache;
  std::vector<Real>& logs = cache[Real::default_precision()];
  while (static_cast<int>(logs.size()) <= n) {
    const int k = static_cast<int>(logs.size());
    logs.push_back(k < 1 ? Real(0) : boost::multiprecision::log(Real(k)));
  }
  return logs[n];
}

Complex pow(int base, const Complex& z) {
  const Real& lb = log_integer(base);
  return exp(Complex(z.re * lb, z.im * lb));
}

Complex ipow(Complex z, int n) {
  if (n < 0) {
    return Complex(1) / ipow(std::move(z), -n);
  }
  Complex result(1);
  while (n > 0) {
    if (n & 1) {
      result *= z;
    }
    n >>= 1;
    if (n > 0) {
      z *= z;
    }
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) {
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

Complex reciprocal(const Complex& z) {
  if (z.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "reciprocal of zero");
  }
  return Complex(1) / z;
}

bool is_integer(const Complex& z, long& value) {
  if (z.im != 0) {
    return false;
  }
  Real f = boost::multiprecision::floor(z.re);
  if (f != z.re || boost::multiprecision::abs(f) > Real(1e15)) {
    return false;
  }
  value = f.convert_to<long>();
  return true;
}

std::string to_string(const Complex& z, int digits) {
  std::ostringstream out;
  out << to_decimal(z.re, digits);
  if (z.im != 0) {
    out << (z.im < 0 ? " - " : " + ") << to_decimal(boost::multiprecision::abs(z.im), digits) << "i";
  }
  return out.str();
}

ComplexPoint to_complex_point(const IntPoint& m) {
  ComplexPoint out;
  out.reserve(m.size());
  for (int v : m) {
    out.emplace_back(v);
  }
  return out;
}

Real rescaled(const Real& x) { return Real(x, Real::default_precision()); }

Complex rescaled(const Complex& z) { return {rescaled(z.re), rescaled(z.im)}; }

ComplexPoint rescaled(const ComplexPoint& s) {
  ComplexPoint out;
  out.reserve(s.size());
  for (const auto& z : s) {
    out.push_back(rescaled(z));
  }
  return out;
}

Real binomial_real(int n, int k) {
  if (k < 0 || k > n) {
    return Real(0);
  }
  Real result(1);
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

Real factorial_real(int n) {
  Real result(1);
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

}  // namespace ezl
