#include "k3bn/quadratic_surd.hpp"

#include <cmath>
#include <numeric>

#include "k3bn/errors.hpp"

namespace k3bn {

namespace {

__extension__ typedef __int128 i128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::strong_ordering sign_of(i128 v) {
  if (v < 0) return std::strong_ordering::less;
  if (v > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArgumentError("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return sign_of(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den);
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw ArgumentError("isqrt: negative argument");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && static_cast<i128>(s) * s > n) --s;
  while (static_cast<i128>(s + 1) * (s + 1) <= n) ++s;
  return s;
}

QuadraticSurd::QuadraticSurd(std::int64_t p, std::int64_t radicand, std::int64_t q)
    : p_(p), radicand_(radicand), q_(q) {
  if (q <= 0) throw ArgumentError("QuadraticSurd: denominator must be positive");
  if (radicand < 0) throw ArgumentError("QuadraticSurd: radicand must be nonnegative");
}

bool QuadraticSurd::is_rational() const noexcept {
  const std::int64_t s = isqrt(radicand_);
  return s * s == radicand_;
}

std::optional<Rational> QuadraticSurd::as_rational() const {
  const std::int64_t s = isqrt(radicand_);
  if (s * s != radicand_) return std::nullopt;
  return Rational(p_ + s, q_);
}

std::strong_ordering QuadraticSurd::compare(const Rational& m) const {
  // sign((p + sqrt(D))/q - a/b) = sign(b*sqrt(D) - t) with t = a*q - b*p,
  // since q, b > 0.
  const i128 b = m.den;
  const i128 t = static_cast<i128>(m.num) * q_ - b * p_;
  if (t < 0) return std::strong_ordering::greater;
  // Both sides nonnegative: compare squares.
  return sign_of(b * b * radicand_ - t * t);
}

std::int64_t QuadraticSurd::floor() const {
  // floor(x / q) == floor(floor(x) / q) for integer q > 0.
  return floor_div(p_ + isqrt(radicand_), q_);
}

std::int64_t QuadraticSurd::ceil() const {
  const std::int64_t s = isqrt(radicand_);
  if (s * s == radicand_) return ceil_div(p_ + s, q_);
  return floor_div(p_ + s, q_) + 1;
}

long double QuadraticSurd::approx() const {
  return (static_cast<long double>(p_) + std::sqrt(static_cast<long double>(radicand_))) /
         static_cast<long double>(q_);
}

std::string QuadraticSurd::to_string() const {
  if (auto r = as_rational()) return r->to_string();
  return "(" + std::to_string(p_) + "+sqrt(" + std::to_string(radicand_) + "))/" +
         std::to_string(q_);
}

}  // namespace k3bn
