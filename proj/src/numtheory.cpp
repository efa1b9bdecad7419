#include "sgc/numtheory.hpp"

#include "sgc/errors.hpp"

namespace sgc {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("value not invertible modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<std::pair<std::uint64_t, int>> factorize(const BigInt& n) {
  if (n.fits_ulong_p()) return factorize(static_cast<std::uint64_t>(n.get_ui()));
  // Group orders here are smooth; trial division up to a fixed limit.
  std::vector<std::pair<std::uint64_t, int>> f;
  BigInt m = n;
  for (std::uint64_t p = 2; p < 1'000'000 && m > 1; ++p) {
    if (!is_prime(p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (m != 1) throw DomainError("order has a large prime factor");
  return f;
}

int nu_p(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("nu_p of zero");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int nu_p(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw DomainError("nu_p of zero");
  BigInt m = abs(n);
  int e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    ++e;
  }
  return e;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt r = 1;
  BigInt m = n;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    r *= p;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  auto fac = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p == 2
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t k = 1;
  std::uint64_t x = a % m;
  while (x != 1) {
    x = mulmod(x, a, m);
    ++k;
    if (k > m) throw DomainError("element not invertible");
  }
  return k;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p()) throw DomainError("integer does not fit in 64 bits");
  return v.get_ui();
}

}  // namespace sgc
