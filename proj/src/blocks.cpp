#include "sgc/blocks.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sgc/errors.hpp"
#include "sgc/subgroups.hpp"

namespace sgc {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients low to high, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const std::uint64_t inv = invmod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size() - 1; i + 1 >= b.size(); --i) {
    std::uint64_t c = mulmod(a[i], inv, p);
    q[i - b.size() + 1] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = i - b.size() + 1 + j;
        a[k] = (a[k] + p - mulmod(c, b[j], p)) % p;
      }
    if (i + 1 == b.size()) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) { return divmod(mul(a, b, p), f, p).second; }

Poly powmod_poly(Poly a, BigInt e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  a = divmod(a, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod_poly(r, a, f, p);
    a = mulmod_poly(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Poly monic(Poly a, std::uint64_t p) {
  trim(a);
  if (a.empty()) return a;
  std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly cyclotomic_poly(std::uint64_t n, std::uint64_t p) {
  Poly f(n + 1, 0);
  f[0] = p - 1;
  f[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) f = divmod(f, cyclotomic_poly(d, p), p).first;
  return f;
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void split(const Poly& f, std::size_t d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t deg = f.size() - 1;
  if (deg == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    Poly a(deg);
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (a.empty()) continue;
    Poly h;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = a, acc = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = mulmod_poly(t, t, f, p);
        acc = sub(acc, sub(Poly{}, t, p), p);
      }
      h = acc;
    } else {
      BigInt e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      h = sub(powmod_poly(a, e, f, p), Poly{1}, p);
    }
    Poly g = gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split(g, d, p, rng, out);
      split(monic(divmod(f, g, p).first, p), d, p, rng, out);
      return;
    }
  }
}

// Element of F_p[x]/(f) as a coefficient vector of length deg f.
using Elem = std::vector<std::uint64_t>;

}  // namespace

std::vector<std::vector<std::uint64_t>> cyclotomic_factors_mod_p(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || n % p == 0) throw DomainError("cyclotomic factorization needs p not dividing n");
  Poly f = cyclotomic_poly(n, p);
  const std::size_t d = mult_order(p % n == 0 ? 1 : p % n, n);
  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> out;
  if (f.size() == 1 + d) out.push_back(f);
  else split(f, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

BlockPartition p_blocks(const CharacterTable& t, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  BlockPartition bp;
  bp.p = p;
  const std::size_t k = t.num_classes(), nchar = t.num_characters();
  const int a = nu_p(t.order, p);
  std::uint64_t e = 1;
  for (const auto& row : t.irr)
    for (const auto& v : row) e = lcm_u64(e, v.conductor());
  std::uint64_t e_prime = e;
  while (e_prime % p == 0) e_prime /= p;
  const Poly f = e_prime == 1 ? Poly{0, 1} : cyclotomic_factors_mod_p(e_prime, p).front();
  const std::size_t d = f.size() - 1;
  // theta = x (or 1 when e' = 1) has order e'; powers theta^0 .. theta^(e'-1).
  std::vector<Elem> theta_pow;
  Poly cur{1};
  for (std::uint64_t i = 0; i < e_prime; ++i) {
    Elem el(d, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) el[j] = cur[j];
    theta_pow.push_back(el);
    cur = e_prime == 1 ? cur : mulmod_poly(cur, Poly{0, 1}, f, p);
  }
  auto reduce = [&](const Cyclotomic& c) {
    if (!c.has_integral_coefficients()) throw InternalError("central character value " + c.str() + " is not integral");
    Elem r(d, 0);
    const std::uint64_t n = c.conductor();
    for (const auto& [exp, coef] : c.terms()) {
      // E(n)^exp = zeta_e^(exp*e/n); reduction sends zeta_e to theta, whose order is e'.
      std::uint64_t idx = (static_cast<std::uint64_t>(exp) * (e / n)) % e_prime;
      BigInt cz = coef.get_num() % static_cast<unsigned long>(p);
      if (cz < 0) cz += static_cast<unsigned long>(p);
      std::uint64_t cm = cz.get_ui();
      for (std::size_t j = 0; j < d; ++j) r[j] = (r[j] + mulmod(cm, theta_pow[idx][j], p)) % p;
    }
    return r;
  };
  std::map<std::vector<Elem>, std::size_t> seen;
  bp.block_of.assign(nchar, 0);
  for (std::size_t chi = 0; chi < nchar; ++chi) {
    std::vector<Elem> sig;
    const Rational deg(t.degree(chi));
    for (std::size_t c = 0; c < k; ++c) sig.push_back(reduce(t.irr[chi][c] * Cyclotomic(Rational(t.classes[c].size)) / deg));
    auto [it, fresh] = seen.try_emplace(std::move(sig), bp.blocks.size());
    if (fresh) bp.blocks.emplace_back();
    bp.blocks[it->second].push_back(chi);
    bp.block_of[chi] = it->second;
  }
  for (const auto& b : bp.blocks) {
    int m = a;
    for (std::size_t chi : b) m = std::min(m, nu_p(t.degree(chi), p));
    bp.defects.push_back(a - m);
  }
  return bp;
}

ClosureResult::XiCertificate xi_closure_certificate(const CharacterTable& t, const std::set<std::size_t>& classes, std::uint64_t p) {
  for (std::size_t x : classes)
    for (std::size_t y : classes)
      for (std::size_t z = 0; z < t.num_classes(); ++z) {
        if (classes.count(z) || t.classes[z].element_order != p) continue;
        if (class_mult_coefficient(t, x, y, z) != 0) return ClosureResult::XiCertificate::kIndeterminate;
      }
  return ClosureResult::XiCertificate::kHolds;
}

ClosureResult closed_class_check(const ClassData& cd, const std::set<std::size_t>& classes, const TablePtr& table,
                                 const Context& ctx) {
  if (classes.empty()) throw DomainError("closed_class_check needs a nonempty class set");
  const std::uint64_t p = cd[*classes.begin()].element_order;
  if (!is_prime(p)) throw DomainError("closed_class_check needs classes of prime order");
  for (std::size_t c : classes)
    if (c >= cd.size() || cd[c].element_order != p) throw DomainError("classes must all have the same prime order");
  const Group& G = cd.group();
  ClosureResult res;
  res.closure = classes;
  std::vector<std::size_t> todo(classes.begin(), classes.end());
  std::set<std::size_t> done;
  while (!todo.empty()) {
    std::size_t c = todo.back();
    todo.pop_back();
    if (!done.insert(c).second) continue;
    const Perm& a = cd[c].representative;
    SubgroupRef C = centralizer(G, a, ctx);
    if (C.order() > ctx.bounds.max_centralizer_enum)
      throw ResourceError("centralizer of " + cd[c].label + " has order " + C.order().get_str() +
                          " over bound centralizer=" + std::to_string(ctx.bounds.max_centralizer_enum));
    for (const Perm& b : C.group.elements(ctx.bounds)) {
      if (!res.closure.count(cd.class_of(b))) continue;
      Perm ab = a * b;
      if (ab.order() != p) continue;
      std::size_t k = cd.class_of(ab);
      if (res.closure.insert(k).second) todo.push_back(k);
    }
    // Products involving a class added later are handled when that class is processed.
    for (std::size_t k : res.closure)
      if (!done.count(k)) todo.push_back(k);
  }
  res.closed = res.closure == classes;
  if (table) {
    res.xi = xi_closure_certificate(*table, classes, p);
    res.note = res.xi == ClosureResult::XiCertificate::kHolds ? "xi certificate holds" : "indeterminate by xi";
  } else {
    res.note = "no table; xi certificate unavailable";
  }
  return res;
}

}  // namespace sgc
