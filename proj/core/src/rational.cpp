#include "vd/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace vd {

namespace {

using int128 = __int128;

long long checked_narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::pair<long long, long long> normalize(int128 num, int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {checked_narrow(num), checked_narrow(den)};
}

}  // namespace

Rational::Rational(long long num, long long den) {
  std::tie(num_, den_) = normalize(num, den);
}

Rational& Rational::operator+=(const Rational& other) {
  std::tie(num_, den_) = normalize(int128(num_) * other.den_ + int128(other.num_) * den_,
                                   int128(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  std::tie(num_, den_) = normalize(int128(num_) * other.den_ - int128(other.num_) * den_,
                                   int128(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  std::tie(num_, den_) = normalize(int128(num_) * other.num_, int128(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational division by zero");
  std::tie(num_, den_) = normalize(int128(num_) * other.den_, int128(den_) * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int128 lhs = int128(a.num_) * b.den_;
  int128 rhs = int128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite number");
  const double tol = 1e-12 * std::max(1.0, std::fabs(x));
  // Walk continued-fraction convergents p/q until one reproduces x.
  long long p_prev = 1, q_prev = 0;
  long long p = static_cast<long long>(std::floor(x)), q = 1;
  double remainder = x - std::floor(x);
  for (int i = 0; i < 64; ++i) {
    double approx = static_cast<double>(p) / static_cast<double>(q);
    if (std::fabs(approx - x) <= tol) return Rational(p, q);
    if (remainder < 1e-15) break;
    remainder = 1.0 / remainder;
    double fl = std::floor(remainder);
    if (fl > 9.0e17) break;
    long long a = static_cast<long long>(fl);
    remainder -= fl;
    long long p_next = checked_narrow(int128(a) * p + p_prev);
    long long q_next = checked_narrow(int128(a) * q + q_prev);
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return Rational(p, q);
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&]() {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) fail();
  std::string s = text.substr(begin, end - begin + 1);

  auto parse_ll = [&](const std::string& part) -> long long {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      fail();
    }
    if (pos != part.size()) fail();
    return v;
  };

  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    long long num = parse_ll(s.substr(0, slash));
    long long den = parse_ll(s.substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
  }
  if (std::size_t dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) fail();
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-") head += "0";
    long long whole = parse_ll(head);
    int128 num = int128(std::llabs(whole));
    int128 den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
      if (den > int128(1000000000000000000LL)) fail();
    }
    if (negative) num = -num;
    auto [n, d] = normalize(num, den);
    return Rational(n, d);
  }
  return Rational(parse_ll(s));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace vd
