#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "arqlab/error.hpp"

namespace arqlab::exactla {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline and combined with 128-bit intermediates; anything larger is promoted
/// to a shared GMP rational. The representation is canonical: a value is held
/// in GMP form only when it does not fit the inline form, so equality can
/// compare representations directly.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      num_ = static_cast<std::int64_t>(n);
    } else if (n <= static_cast<std::uint64_t>(INT64_MAX)) {
      num_ = static_cast<std::int64_t>(n);
    } else {
      *this = from_i128(static_cast<__int128>(n), 1);
    }
  }

  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
    *this = from_i128(n, d);
  }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(ErrorKind::Parse, "empty number");
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::Parse, "bad rational '" + s + "'");
    if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return from_mpq(q);
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num_);
    mpz_set_si(q.get_den_mpz_t(), den_);
    return q;
  }
  mpz_class numerator() const { return to_mpq().get_num(); }
  mpz_class denominator() const { return to_mpq().get_den(); }

  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      return from_i128(n, d);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r);
      }
      return from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
    if (!a.big_ && !b.big_) {
      return from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    return from_mpq(a.to_mpq() / b.to_mpq());
  }
  Rational operator-() const {
    if (!big_ && num_ != INT64_MIN) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_mpq(-to_mpq());
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      if ((a >> 64) == 0 && (b >> 64) == 0) {
        std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
        while (y != 0) {
          std::uint64_t t = x % y;
          x = y;
          y = t;
        }
        return x;
      }
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

  static mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      // |d| < 2^127 always holds for products of two int64 values
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
    unsigned __int128 g = gcd_u128(un, static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  static Rational from_mpq(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      Rational r;
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
      return r;
    }
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(q);
    return r;
  }
};

}  // namespace arqlab::exactla
