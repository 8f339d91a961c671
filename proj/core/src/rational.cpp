#include "psr/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "psr/errors.hpp"

namespace psr {
namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

constexpr long long kMaxSmall = 0x7fffffffffffffffLL;

uint128 u128_abs(int128 x) { return x < 0 ? -static_cast<uint128>(x) : static_cast<uint128>(x); }

uint128 gcd_u128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void mpz_from_i128(mpz_class& out, int128 v) {
  uint128 mag = u128_abs(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  hi <<= 64;
  hi += static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
  out = v < 0 ? mpz_class(-hi) : hi;
}

bool fits_small(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = make(num, den);
}

Rational Rational::make(int128 num, int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  uint128 g = gcd_u128(u128_abs(num), static_cast<uint128>(den));
  num /= static_cast<int128>(g);
  den /= static_cast<int128>(g);
  Rational r;
  if (u128_abs(num) <= static_cast<uint128>(kMaxSmall) &&
      static_cast<uint128>(den) <= static_cast<uint128>(kMaxSmall)) {
    r.n_ = static_cast<long long>(num);
    r.d_ = static_cast<long long>(den);
    return r;
  }
  mpz_class zn, zd;
  mpz_from_i128(zn, num);
  mpz_from_i128(zd, den);
  mpq_class q;
  q.get_num() = zn;
  q.get_den() = zd;
  r.adopt(std::move(q));
  return r;
}

void Rational::adopt(mpq_class q) {
  q.canonicalize();
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    n_ = q.get_num().get_si();
    d_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  n_ = 0;
  d_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw InputError("malformed decimal: " + s);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw InputError("malformed number: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r;
    r.adopt(mpq_class(num, den));
    return r;
  }
  auto slash = s.find('/');
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("malformed number: " + s);
  if (slash != std::string::npos && mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::domain_error("Rational: zero denominator");
  Rational r;
  r.adopt(std::move(q));
  return r;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  Rational r;
  r.adopt(std::move(q));
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return mpq_sgn(big_->get_mpq_t());
  return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  Rational r;
  r.adopt(mpq_class(-*big_));
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  if (!big_ && !o.big_) {
    int128 num = static_cast<int128>(n_) * o.d_ + static_cast<int128>(o.n_) * d_;
    int128 den = static_cast<int128>(d_) * o.d_;
    return make(num, den);
  }
  Rational r;
  r.adopt(to_mpq() + o.to_mpq());
  return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  if (!big_ && !o.big_) {
    int128 num = static_cast<int128>(n_) * o.n_;
    int128 den = static_cast<int128>(d_) * o.d_;
    return make(num, den);
  }
  Rational r;
  r.adopt(to_mpq() * o.to_mpq());
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    int128 num = static_cast<int128>(n_) * o.d_;
    int128 den = static_cast<int128>(d_) * o.n_;
    return make(num, den);
  }
  Rational r;
  r.adopt(to_mpq() / o.to_mpq());
  return r;
}

bool Rational::operator==(const Rational& o) const {
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  if (big_ && o.big_) return mpq_equal(big_->get_mpq_t(), o.big_->get_mpq_t()) != 0;
  return false;  // canonical bigs never fit the small form
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  if (!big_ && !o.big_) {
    int128 lhs = static_cast<int128>(n_) * o.d_;
    int128 rhs = static_cast<int128>(o.n_) * d_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }
  int c = mpq_cmp(to_mpq().get_mpq_t(), o.to_mpq().get_mpq_t());
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(n_) / static_cast<double>(d_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(static_cast<long>(n_), static_cast<unsigned long>(d_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace psr
