#include "sheafradon/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sheafradon {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
    if (digits.front() == '+') digits.erase(digits.begin());
    for (std::size_t i = (digits.front() == '-') ? 1 : 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw std::invalid_argument("malformed rational '" + s + "'");
      }
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i >= part.size()) throw std::invalid_argument("malformed rational '" + s + "'");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw std::invalid_argument("malformed rational '" + s + "'");
      }
    }
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational squared_norm(const Point& p) { return dot(p, p); }

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

// ---------------------------------------------------------------------------

namespace {

// Splits n = square^2 * free with free square-free.
std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t n) {
  std::int64_t square = 1;
  std::int64_t free = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    int count = 0;
    while (n % f == 0) {
      n /= f;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) square *= f;
    if (count % 2 == 1) free *= f;
  }
  free *= n;
  return {square, free};
}

int rational_sign(const Rational& q) { return sgn(q); }

}  // namespace

Surd::Surd(Rational rational) : rational_(std::move(rational)) {}

Surd::Surd(Rational rational, Rational irrational, std::int64_t radicand)
    : rational_(std::move(rational)), irrational_(std::move(irrational)), radicand_(radicand) {
  if (radicand_ <= 0) throw std::domain_error("surd radicand must be positive");
  normalize();
}

Surd Surd::sqrt_of(std::int64_t n, const Rational& scale) { return Surd(0, scale, n); }

void Surd::normalize() {
  if (irrational_ == 0) {
    radicand_ = 1;
    return;
  }
  auto [square, free] = square_free_split(radicand_);
  irrational_ *= square;
  radicand_ = free;
  if (radicand_ == 1) {
    rational_ += irrational_;
    irrational_ = 0;
  }
}

std::int64_t Surd::common_radicand(const Surd& a, const Surd& b) {
  if (a.is_rational()) return b.radicand_;
  if (b.is_rational()) return a.radicand_;
  if (a.radicand_ != b.radicand_) {
    throw std::domain_error("surds from different quadratic fields: sqrt(" +
                            std::to_string(a.radicand_) + ") vs sqrt(" +
                            std::to_string(b.radicand_) + ")");
  }
  return a.radicand_;
}

int Surd::sign() const {
  int s = rational_sign(rational_);
  int t = rational_sign(irrational_);
  if (t == 0) return s;
  if (s == 0 || s == t) return t;
  // Opposite signs: compare rational^2 with irrational^2 * radicand.
  Rational lhs = rational_ * rational_;
  Rational rhs = irrational_ * irrational_ * radicand_;
  if (lhs > rhs) return s;
  if (lhs < rhs) return t;
  return 0;
}

double Surd::to_double() const {
  long double v = static_cast<long double>(rational_.get_d()) +
                  static_cast<long double>(irrational_.get_d()) *
                      std::sqrt(static_cast<long double>(radicand_));
  return static_cast<double>(v);
}

std::string Surd::to_string() const {
  if (is_rational()) return sheafradon::to_string(rational_);
  std::string out;
  if (rational_ != 0) out = sheafradon::to_string(rational_) + (irrational_ > 0 ? "+" : "");
  out += sheafradon::to_string(irrational_) + "*sqrt(" + std::to_string(radicand_) + ")";
  return out;
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.rational_ = -r.rational_;
  r.irrational_ = -r.irrational_;
  return r;
}

Surd operator+(const Surd& a, const Surd& b) {
  std::int64_t n = Surd::common_radicand(a, b);
  return Surd(a.rational_ + b.rational_, a.irrational_ + b.irrational_, n);
}

Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

Surd operator*(const Surd& a, const Surd& b) {
  std::int64_t n = Surd::common_radicand(a, b);
  return Surd(a.rational_ * b.rational_ + a.irrational_ * b.irrational_ * n,
              a.rational_ * b.irrational_ + a.irrational_ * b.rational_, n);
}

Surd operator*(const Rational& s, const Surd& a) {
  return Surd(s * a.rational_, s * a.irrational_, a.radicand_);
}

Surd operator/(const Surd& a, const Rational& s) {
  if (s == 0) throw std::domain_error("surd division by zero");
  return Surd(a.rational_ / s, a.irrational_ / s, a.radicand_);
}

Surd Surd::divided_by_sqrt(std::int64_t n) const {
  if (n <= 0) throw std::domain_error("sqrt of non-positive number");
  // (r + i sqrt(n)) / sqrt(n) = i + (r / n) sqrt(n)
  Surd root = Surd::sqrt_of(n);
  if (root.is_rational()) return *this / root.rational_part();
  std::int64_t free = root.radicand();
  const Rational& scale = root.irrational_part();  // sqrt(n) = scale * sqrt(free)
  if (!is_rational() && radicand_ != free) {
    throw std::domain_error("surd division by sqrt from a different field");
  }
  Rational i = is_rational() ? Rational(0) : irrational_;
  return Surd(i / scale, rational_ / (scale * free), free);
}

namespace {

// Sign of r + u*sqrt(m) + v*sqrt(n) for square-free m != n.
int mixed_sign(const Rational& r, const Rational& u, std::int64_t m, const Rational& v,
               std::int64_t n) {
  int su = sgn(u);
  int sv = sgn(v);
  int sa = 0;
  if (su == 0 || sv == 0 || su == sv) {
    sa = su != 0 ? su : sv;
  } else {
    Rational lhs = u * u * m;
    Rational rhs = v * v * n;
    sa = lhs > rhs ? su : (lhs < rhs ? sv : 0);
  }
  int sr = sgn(r);
  if (sr == 0) return sa;
  if (sa == 0 || sa == sr) return sr;
  // |u sqrt(m) + v sqrt(n)|^2 against r^2.
  Surd diff(u * u * m + v * v * n - r * r, 2 * u * v, m * n);
  int s = diff.sign();
  return s > 0 ? sa : (s < 0 ? sr : 0);
}

}  // namespace

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  int s = 0;
  if (a.is_rational() || b.is_rational() || a.radicand() == b.radicand()) {
    s = (a - b).sign();
  } else {
    s = mixed_sign(a.rational_part() - b.rational_part(), a.irrational_part(), a.radicand(),
                   -b.irrational_part(), b.radicand());
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Surd abs(const Surd& s) { return s.sign() < 0 ? -s : s; }
const Surd& max(const Surd& a, const Surd& b) { return (a < b) ? b : a; }
const Surd& min(const Surd& a, const Surd& b) { return (b < a) ? b : a; }

}  // namespace sheafradon
