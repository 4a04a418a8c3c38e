#include "fgcell/scalar.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "fgcell/errors.hpp"

namespace fg {

std::string_view backend_name(Backend b) { return b == Backend::Rational ? "rational" : "float"; }

Backend parse_backend(std::string_view name) {
  if (name == "rational") return Backend::Rational;
  if (name == "float") return Backend::Float;
  throw Error(ErrorCode::MalformedInput, "unknown backend '" + std::string(name) + "'");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Exact value of a decimal literal such as "-12.5e-3".
mpq_class parse_decimal(std::string_view s) {
  std::string_view orig = s;
  auto bad = [&] { return Error(ErrorCode::MalformedInput, "not a number: '" + std::string(orig) + "'"); };
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!es.empty() && (es[0] == '-' || es[0] == '+')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw bad();
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || ip.size() + fp.size() == 0)
      throw bad();
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw bad();
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

mpq_class parse_exact(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
    std::string_view nn = (!n.empty() && n[0] == '-') ? n.substr(1) : n;
    if (!all_digits(nn) || !all_digits(d))
      throw Error(ErrorCode::MalformedInput, "not a rational: '" + std::string(s) + "'");
    mpz_class den(std::string(d), 10);
    if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(s) + "'");
    mpq_class q(mpz_class(std::string(n), 10), den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

}  // namespace

Scalar Scalar::fraction(long num, long den) { return Scalar(mpq_class(num, den)); }

Scalar Scalar::parse(std::string_view text, Backend backend) {
  mpq_class q = parse_exact(text);
  if (backend == Backend::Rational) return Scalar(q);
  // Decimal input goes through the correctly rounded parser.
  if (text.find('/') == std::string_view::npos) {
    double d = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), d);
    if (res.ec == std::errc() && res.ptr == text.data() + text.size()) return Scalar(d);
  }
  return Scalar(q.get_d());
}

double Scalar::to_double() const { return is_exact() ? rational().get_d() : std::get<1>(v_); }

Scalar Scalar::to(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::Float) return Scalar(to_double());
  double d = std::get<1>(v_);
  if (!std::isfinite(d)) throw Error(ErrorCode::MalformedInput, "non-finite value cannot be made exact");
  return Scalar(mpq_class(d));
}

int Scalar::sign() const {
  if (is_exact()) return sgn(rational());
  double d = std::get<1>(v_);
  return (d > 0) - (d < 0);
}

int Scalar::sign_tol() const {
  if (is_exact()) return sign();
  double d = std::get<1>(v_);
  if (std::fabs(d) < kTolerance) return 0;
  return d > 0 ? 1 : -1;
}

std::string Scalar::str() const {
  if (is_exact()) return rational().get_str(10);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<1>(v_));
  return std::string(buf, res.ptr);
}

#define FG_SCALAR_OP(OP)                                          \
  Scalar& Scalar::operator OP##=(const Scalar& o) {               \
    if (is_exact() && o.is_exact()) {                             \
      std::get<0>(v_) OP##= o.rational();                         \
    } else {                                                      \
      v_ = to_double() OP o.to_double();                          \
    }                                                             \
    return *this;                                                 \
  }

FG_SCALAR_OP(+)
FG_SCALAR_OP(-)
FG_SCALAR_OP(*)
#undef FG_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (o.rational() == 0) throw Error(ErrorCode::SingularSystem, "division by zero");
    std::get<0>(v_) /= o.rational();
  } else {
    v_ = to_double() / o.to_double();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rational()));
  return Scalar(-std::get<1>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Scalar pow(const Scalar& x, int n) {
  if (n < 0) return Scalar(1) / pow(x, -n);
  Scalar r(1), b = x;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Scalar sqrt(const Scalar& x) { return Scalar(std::sqrt(x.to_double())); }
Scalar cbrt(const Scalar& x) { return Scalar(std::cbrt(x.to_double())); }
Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double x = a.to_double(), y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol * scale;
}

}  // namespace fg
