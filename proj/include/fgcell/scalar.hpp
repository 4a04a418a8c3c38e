#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace fg {

enum class Backend { Rational, Float };

inline constexpr double kTolerance = 1e-9;

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

// A number that is either an exact rational or a double. Integer literals are
// exact. Mixing a rational with a double yields a double.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int v) : v_(mpq_class(v)) {}
  Scalar(long v) : v_(mpq_class(v)) {}
  explicit Scalar(double v) : v_(v) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<0>(v_).canonicalize(); }

  static Scalar fraction(long num, long den);
  // Accepts "p", "p/q" or a decimal literal. Decimal literals are converted
  // exactly when the target backend is rational.
  static Scalar parse(std::string_view text, Backend backend);

  bool is_exact() const { return v_.index() == 0; }
  Backend backend() const { return is_exact() ? Backend::Rational : Backend::Float; }
  const mpq_class& rational() const { return std::get<0>(v_); }
  double to_double() const;
  Scalar to(Backend b) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  // Sign with |x| < kTolerance treated as zero for doubles; exact otherwise.
  int sign_tol() const;

  // "p/q" in lowest terms (or "p" for integers); shortest round-trip decimal
  // for doubles.
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, double> v_;
};

Scalar pow(const Scalar& x, int n);
Scalar sqrt(const Scalar& x);  // always a double
Scalar cbrt(const Scalar& x);  // always a double
Scalar abs(const Scalar& x);

// Relative-or-absolute closeness for doubles, exact equality for rationals.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kTolerance);

}  // namespace fg
