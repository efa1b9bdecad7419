#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sgc {

using BigInt = mpz_class;
using Rational = mpq_class;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
// Prime factorization as (prime, exponent), primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factorize(const BigInt& n);
int nu_p(std::uint64_t n, std::uint64_t p);
int nu_p(const BigInt& n, std::uint64_t p);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
BigInt p_part(const BigInt& n, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t primitive_root(std::uint64_t p);
// Multiplicative order of a modulo m (gcd(a,m) = 1).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

std::uint64_t to_u64(const BigInt& v);  // throws DomainError if it does not fit

}  // namespace sgc
