#pragma once

#include <cctype>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "arqlab/error.hpp"
#include "arqlab/exactla/modp.hpp"
#include "arqlab/exactla/rational.hpp"

namespace arqlab::exactla {

template <class K>
concept ExactField = requires(K a, K b, std::string_view s) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { K::parse(s) } -> std::convertible_to<K>;
  K(0);
  K(1);
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

enum class FieldKind { Rationals, Prime };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
  }

  /// Accepts the file spellings `Q`, `GF(p)` and the flag spellings `q`, `gf:p`.
  static FieldSpec parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (s == "q" || s == "qq" || s == "rationals") return rationals();
    std::string digits;
    if (s.rfind("gf(", 0) == 0 && s.size() > 4 && s.back() == ')') {
      digits = s.substr(3, s.size() - 4);
    } else if (s.rfind("gf:", 0) == 0) {
      digits = s.substr(3);
    } else {
      fail(ErrorKind::Parse, "unknown field '" + std::string(text) + "'");
    }
    if (digits.empty() || digits.size() > 18 || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::Parse, "bad characteristic in '" + std::string(text) + "'");
    }
    std::uint64_t p = std::stoull(digits);
    if (!is_prime(p)) fail(ErrorKind::Parse, "characteristic " + digits + " is not prime");
    return {FieldKind::Prime, p};
  }

  std::string to_string() const {
    return kind == FieldKind::Rationals ? std::string("Q") : "GF(" + std::to_string(characteristic) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::uint64_t characteristic() { return 0; }
  static FieldSpec spec() { return FieldSpec::rationals(); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct FieldTraits<ModP> {
  static std::uint64_t characteristic() { return ModP::modulus(); }
  static FieldSpec spec() { return {FieldKind::Prime, ModP::modulus()}; }
  static ModP from_rational(const Rational& q) { return ModP::from_rational(q); }
};

/// Throws CharacteristicTooSmall unless char K is 0 or exceeds `dim`.
template <class K>
void require_characteristic_above(std::size_t dim, const std::string& what) {
  const std::uint64_t p = FieldTraits<K>::characteristic();
  if (p != 0 && p <= dim) {
    fail(ErrorKind::CharacteristicTooSmall,
         what + " has dimension " + std::to_string(dim) + " but the field has characteristic " + std::to_string(p));
  }
}

}  // namespace arqlab::exactla
