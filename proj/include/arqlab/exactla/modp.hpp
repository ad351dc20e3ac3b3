#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "arqlab/error.hpp"
#include "arqlab/exactla/rational.hpp"

namespace arqlab::exactla {

/// Element of the prime field GF(p).
///
/// The modulus is thread-local state installed with FieldScope; every ModP
/// value in a computation is interpreted against the modulus active when it
/// is combined.
class ModP {
 public:
  ModP() = default;

  template <std::integral I>
  ModP(I n) {  // NOLINT(google-explicit-constructor)
    const std::uint64_t p = checked_modulus();
    if constexpr (std::is_signed_v<I>) {
      __int128 r = static_cast<__int128>(n) % static_cast<__int128>(p);
      if (r < 0) r += p;
      v_ = static_cast<std::uint64_t>(r);
    } else {
      v_ = static_cast<std::uint64_t>(n) % p;
    }
  }

  static ModP from_rational(const Rational& q) {
    const std::uint64_t p = checked_modulus();
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class num = q.numerator() % pm;
    if (num < 0) num += pm;
    mpz_class den = q.denominator() % pm;
    if (den == 0) fail(ErrorKind::Parse, "denominator of " + q.to_string() + " vanishes modulo " + std::to_string(p));
    ModP a = raw(num.get_ui());
    ModP b = raw(den.get_ui());
    return a / b;
  }

  static ModP parse(std::string_view text) { return from_rational(Rational::parse(text)); }

  static std::uint64_t modulus() { return mod_ref(); }
  static void set_modulus(std::uint64_t p) { mod_ref() = p; }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Symmetric representative, so that p-1 prints as -1.
  std::string to_string() const {
    const std::uint64_t p = modulus();
    if (p != 0 && v_ > p / 2) return "-" + std::to_string(p - v_);
    return std::to_string(v_);
  }

  friend ModP operator+(ModP a, ModP b) {
    const std::uint64_t p = modulus();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p || s < a.v_) s -= p;
    return raw(s);
  }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (modulus() - b.v_)); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % modulus()));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }

  ModP inverse() const {
    if (v_ == 0) fail(ErrorKind::InvalidArgument, "division by zero in GF(" + std::to_string(modulus()) + ")");
    return pow(modulus() - 2);
  }
  ModP pow(std::uint64_t e) const {
    ModP base = *this, r = raw(1 % modulus());
    while (e != 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator<(ModP a, ModP b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.to_string(); }

 private:
  std::uint64_t v_ = 0;

  static ModP raw(std::uint64_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  static std::uint64_t& mod_ref() {
    thread_local std::uint64_t p = 0;
    return p;
  }
  static std::uint64_t checked_modulus() {
    const std::uint64_t p = mod_ref();
    if (p == 0) fail(ErrorKind::InvalidArgument, "no prime modulus installed (use FieldScope)");
    return p;
  }
};

/// Installs a prime modulus for the current thread and restores the previous
/// one on destruction.
class FieldScope {
 public:
  explicit FieldScope(std::uint64_t p) : saved_(ModP::modulus()) { ModP::set_modulus(p); }
  ~FieldScope() { ModP::set_modulus(saved_); }
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace arqlab::exactla
