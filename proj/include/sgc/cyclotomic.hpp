#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgc/numtheory.hpp"

namespace sgc {

// Exact element of a cyclotomic field in a Zumbroich-style basis, conductor minimal.
class Cyclotomic {
 public:
  using Term = std::pair<std::uint32_t, Rational>;  // (basis exponent, coefficient)

  Cyclotomic() = default;  // zero
  Cyclotomic(long v);      // NOLINT: implicit from integers is convenient for tables
  Cyclotomic(const Rational& q);
  static Cyclotomic root(std::uint32_t n, std::int64_t k = 1);  // E(n)^k
  // Parses sums like "-E(7)-E(7)^2", "1/2*E(5)^3+2", "3".
  static Cyclotomic parse(std::string_view text);

  std::uint32_t conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational() const;  // throws DomainError unless rational
  bool is_integer() const;
  BigInt integer() const;  // throws unless a rational integer
  bool has_integral_coefficients() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator/(const Rational& q) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic galois(std::int64_t k) const;  // zeta -> zeta^k, k coprime to the conductor
  Cyclotomic conj() const { return galois(-1); }

  std::string str() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  // Total order: rationals first (numerically), then by conductor and terms.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  // Build from arbitrary exponents modulo n, then reduce to canonical form.
  static Cyclotomic normalize(std::uint32_t n, std::vector<Term> raw);

  std::uint32_t n_ = 1;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace sgc
