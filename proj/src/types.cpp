#include "wl1/types.hpp"

namespace wl1 {

namespace {
long long checked_gcd(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}
}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = checked_gcd(n, d);
  num = (g == 0) ? 0 : n / g;
  den = (g == 0) ? 1 : d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long rational_times_int_exact(const Rational& r, long long n, const char* what) {
  const long long prod = r.num * n;
  if (prod % r.den != 0)
    throw std::invalid_argument(std::string(what) + " = " + r.str() + " * " +
                                std::to_string(n) + " is not an integer");
  return prod / r.den;
}

}  // namespace wl1
