#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sheafradon {

using Rational = mpq_class;

/// Parses "3", "-3/2" or a finite decimal such as "0.25". Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational dot(const Point& a, const Point& b);
Rational cross(const Point& a, const Point& b);
Rational squared_norm(const Point& p);
std::string to_string(const Point& p);

/// An element rational + irrational * sqrt(radicand) of a real quadratic
/// field. Radicands are kept square-free; a zero irrational part forces
/// radicand 1. Arithmetic between two surds with different nontrivial
/// radicands is rejected with std::domain_error; comparison is exact for any
/// pair.
class Surd {
 public:
  Surd() = default;
  Surd(Rational rational);  // NOLINT(google-explicit-constructor)
  Surd(std::int64_t value) : Surd(Rational(value)) {}  // NOLINT
  Surd(Rational rational, Rational irrational, std::int64_t radicand);

  /// scale * sqrt(n), with n > 0.
  static Surd sqrt_of(std::int64_t n, const Rational& scale = 1);

  const Rational& rational_part() const { return rational_; }
  const Rational& irrational_part() const { return irrational_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_rational() const { return irrational_ == 0; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const Rational& s, const Surd& a);
  friend Surd operator/(const Surd& a, const Rational& s);
  /// Exact division by sqrt(n) for the surd's own radicand (or any n when
  /// the surd is rational).
  Surd divided_by_sqrt(std::int64_t n) const;

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.rational_ == b.rational_ && a.irrational_ == b.irrational_ &&
           a.radicand_ == b.radicand_;
  }
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

 private:
  void normalize();
  static std::int64_t common_radicand(const Surd& a, const Surd& b);

  Rational rational_{0};
  Rational irrational_{0};
  std::int64_t radicand_ = 1;
};

Surd abs(const Surd& s);
const Surd& max(const Surd& a, const Surd& b);
const Surd& min(const Surd& a, const Surd& b);

}  // namespace sheafradon
