#include "sgc/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "sgc/errors.hpp"

namespace sgc {

namespace {

struct PrimePower {
  std::uint32_t q = 0;
  int a = 0;
  std::uint32_t qa = 0;   // q^a
  std::uint32_t co = 0;   // n / q^a
  std::uint32_t inv = 0;  // co^-1 mod q^a
};

struct FieldInfo {
  std::uint32_t n = 1;
  std::vector<PrimePower> pp;
  // For every exponent k mod n: its expansion in the basis as (exponent, sign).
  std::vector<std::vector<std::pair<std::uint32_t, int>>> expansion;
};

std::vector<PrimePower> prime_powers(std::uint32_t n) {
  std::vector<PrimePower> out;
  for (auto [q, a] : factorize(static_cast<std::uint64_t>(n))) {
    PrimePower p;
    p.q = static_cast<std::uint32_t>(q);
    p.a = a;
    p.qa = 1;
    for (int i = 0; i < a; ++i) p.qa *= p.q;
    p.co = n / p.qa;
    p.inv = p.qa == 1 ? 0 : static_cast<std::uint32_t>(invmod(p.co % p.qa, p.qa));
    out.push_back(p);
  }
  return out;
}

std::uint32_t component(const PrimePower& p, std::uint64_t k) {
  return static_cast<std::uint32_t>((k % p.qa) * p.inv % p.qa);
}

std::uint32_t compose(const std::vector<PrimePower>& pp, const std::vector<std::uint32_t>& c, std::uint32_t n) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < pp.size(); ++i) k = (k + static_cast<std::uint64_t>(c[i]) * pp[i].co) % n;
  return static_cast<std::uint32_t>(k);
}

bool component_in_basis(const PrimePower& p, std::uint32_t c) {
  std::uint32_t step = p.qa / p.q;  // q^(a-1)
  if (p.q == 2) return c < step;
  return c / step != 0;
}

// Expansion of one component exponent into basis exponents with signs.
std::vector<std::pair<std::uint32_t, int>> component_expansion(const PrimePower& p, std::uint32_t c) {
  std::uint32_t step = p.qa / p.q;
  if (component_in_basis(p, c)) return {{c, 1}};
  if (p.q == 2) return {{c - step, -1}};
  std::vector<std::pair<std::uint32_t, int>> out;
  for (std::uint32_t l = 1; l < p.q; ++l) out.emplace_back(c + l * step, -1);
  return out;
}

std::shared_ptr<const FieldInfo> field(std::uint32_t n) {
  static std::mutex mu;
  static std::unordered_map<std::uint32_t, std::shared_ptr<const FieldInfo>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<FieldInfo>();
  f->n = n;
  f->pp = prime_powers(n);
  f->expansion.resize(n);
  std::vector<std::uint32_t> c(f->pp.size());
  for (std::uint32_t k = 0; k < n; ++k) {
    std::vector<std::pair<std::vector<std::uint32_t>, int>> acc{{{}, 1}};
    for (const PrimePower& p : f->pp) {
      std::vector<std::pair<std::vector<std::uint32_t>, int>> next;
      for (auto& [vec, sign] : acc)
        for (auto [cc, s] : component_expansion(p, component(p, k))) {
          auto v = vec;
          v.push_back(cc);
          next.emplace_back(std::move(v), sign * s);
        }
      acc = std::move(next);
    }
    for (auto& [vec, sign] : acc) f->expansion[k].emplace_back(compose(f->pp, vec, n), sign);
  }
  cache.emplace(n, f);
  return f;
}

std::uint64_t lcm32(std::uint32_t a, std::uint32_t b) { return lcm_u64(a, b); }

}  // namespace

Cyclotomic::Cyclotomic(long v) {
  if (v != 0) terms_.emplace_back(0, Rational(v));
}

Cyclotomic::Cyclotomic(const Rational& q) {
  if (q == 0) return;
  Rational c = q;
  c.canonicalize();
  terms_.emplace_back(0, std::move(c));
}

Cyclotomic Cyclotomic::root(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw DomainError("E(0) is undefined");
  std::int64_t kk = k % static_cast<std::int64_t>(n);
  if (kk < 0) kk += n;
  return normalize(n, {{static_cast<std::uint32_t>(kk), Rational(1)}});
}

Cyclotomic Cyclotomic::normalize(std::uint32_t n, std::vector<Term> raw) {
  auto f = field(n);
  std::map<std::uint32_t, Rational> acc;
  for (auto& [k, c] : raw) {
    if (c == 0) continue;
    for (auto [e, s] : f->expansion[k % n]) {
      if (s > 0) acc[e] += c;
      else acc[e] -= c;
    }
  }
  std::vector<Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, c);
  if (terms.empty()) return Cyclotomic();

  // Conductor reduction, prime by prime, until stable.
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    auto pp = field(n)->pp;
    for (std::size_t i = 0; i < pp.size() && !changed; ++i) {
      const PrimePower& p = pp[i];
      std::uint32_t newn = n / p.q;
      auto npp = newn > 1 ? field(newn)->pp : std::vector<PrimePower>{};
      // component vectors of every term
      std::vector<std::vector<std::uint32_t>> comps;
      for (auto& t : terms) {
        std::vector<std::uint32_t> c;
        for (const PrimePower& r : pp) c.push_back(component(r, t.first));
        comps.push_back(std::move(c));
      }
      auto rebuild = [&](const std::vector<std::uint32_t>& c, std::optional<std::uint32_t> replaced) {
        // component vector for newn: same primes, p's entry replaced or dropped
        std::vector<std::uint32_t> nc;
        std::size_t j = 0;
        for (std::size_t r = 0; r < pp.size(); ++r) {
          if (r == i) {
            if (replaced) nc.push_back(*replaced);
            continue;
          }
          nc.push_back(c[r]);
          ++j;
        }
        return newn == 1 ? 0u : compose(npp, nc, newn);
      };
      if (p.a >= 2 || p.q == 2) {
        if (p.q == 2 && p.a == 1) {
          std::vector<Term> nt;
          for (std::size_t t = 0; t < terms.size(); ++t) nt.emplace_back(rebuild(comps[t], std::nullopt), terms[t].second);
          terms = std::move(nt);
          n = newn;
          changed = true;
          break;
        }
        bool all = true;
        for (auto& c : comps)
          if (c[i] % p.q != 0) all = false;
        if (!all) continue;
        std::vector<Term> nt;
        for (std::size_t t = 0; t < terms.size(); ++t) nt.emplace_back(rebuild(comps[t], comps[t][i] / p.q), terms[t].second);
        terms = std::move(nt);
        n = newn;
        changed = true;
      } else {
        // a == 1, q odd: coefficients over c_q = 1..q-1 must agree for each remaining tuple.
        std::map<std::vector<std::uint32_t>, std::vector<Rational>> groups;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          auto key = comps[t];
          std::uint32_t cq = key[i];
          key[i] = 0;
          auto& v = groups[key];
          if (v.empty()) v.assign(p.q, Rational(0));
          v[cq] = terms[t].second;
        }
        bool ok = true;
        for (auto& [key, v] : groups) {
          for (std::uint32_t l = 2; l < p.q && ok; ++l)
            if (v[l] != v[1]) ok = false;
          if (!ok) break;
        }
        if (!ok) continue;
        std::vector<Term> nt;
        for (auto& [key, v] : groups) nt.emplace_back(rebuild(key, std::nullopt), -v[1]);
        std::sort(nt.begin(), nt.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        terms = std::move(nt);
        n = newn;
        changed = true;
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Cyclotomic out;
  out.n_ = n;
  out.terms_ = std::move(terms);
  return out;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw DomainError("value " + str() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

bool Cyclotomic::is_integer() const {
  if (!is_rational()) return false;
  return terms_.empty() || terms_[0].second.get_den() == 1;
}

BigInt Cyclotomic::integer() const {
  if (!is_integer()) throw DomainError("value " + str() + " is not a rational integer");
  return terms_.empty() ? BigInt(0) : BigInt(terms_[0].second.get_num());
}

bool Cyclotomic::has_integral_coefficients() const {
  for (auto& t : terms_)
    if (t.second.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::uint32_t N = static_cast<std::uint32_t>(lcm32(n_, o.n_));
  std::vector<Term> raw;
  for (auto& [e, c] : terms_) raw.emplace_back(e * (N / n_), c);
  for (auto& [e, c] : o.terms_) raw.emplace_back(e * (N / o.n_), c);
  if (N == n_ && N == o.n_) {
    // fast path: merge without re-expansion (both already in the same basis)
    std::map<std::uint32_t, Rational> acc;
    for (auto& [e, c] : raw) acc[e] += c;
    std::vector<Term> merged;
    for (auto& [e, c] : acc)
      if (c != 0) merged.emplace_back(e, c);
    if (merged.empty()) return Cyclotomic();
    return normalize(N, std::move(merged));
  }
  return normalize(N, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (o.is_rational()) {
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second *= o.terms_[0].second;
    return r;
  }
  if (is_rational()) return o * *this;
  std::uint32_t N = static_cast<std::uint32_t>(lcm32(n_, o.n_));
  std::map<std::uint32_t, Rational> acc;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      std::uint32_t e = static_cast<std::uint32_t>((static_cast<std::uint64_t>(e1) * (N / n_) +
                                                    static_cast<std::uint64_t>(e2) * (N / o.n_)) % N);
      acc[e] += c1 * c2;
    }
  std::vector<Term> raw(acc.begin(), acc.end());
  return normalize(N, std::move(raw));
}

Cyclotomic Cyclotomic::operator/(const Rational& q) const {
  if (q == 0) throw DomainError("division by zero");
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second /= q;
  return r;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (is_rational()) return *this;
  std::int64_t kk = k % static_cast<std::int64_t>(n_);
  if (kk < 0) kk += n_;
  if (gcd_u64(static_cast<std::uint64_t>(kk), n_) != 1) throw DomainError("Galois exponent not coprime to conductor");
  std::vector<Term> raw;
  for (auto& [e, c] : terms_) raw.emplace_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(e) * kk % n_), c);
  return normalize(n_, std::move(raw));
}

std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms_) {
    std::string term;
    if (n_ == 1 || e == 0) {
      term = c.get_str();
    } else {
      std::string root = "E(" + std::to_string(n_) + ")" + (e == 1 ? "" : "^" + std::to_string(e));
      if (c == 1) term = root;
      else if (c == -1) term = "-" + root;
      else term = c.get_str() + "*" + root;
    }
    if (!s.empty() && term[0] != '-') s += '+';
    s += term;
  }
  return s;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_rational()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  std::size_t m = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first <=> b.terms_[i].first;
    int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return InputError("cyclotomic '" + std::string(text) + "' column " + std::to_string(i + 1) + ": " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw fail("expected digits");
    return std::string(text.substr(s, i - s));
  };
  Cyclotomic total;
  skip();
  if (i == text.size()) throw fail("empty expression");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_uint();
      if (i < text.size() && text[i] == '/') {
        ++i;
        num += "/" + read_uint();
      }
      coef = Rational(num);
      coef.canonicalize();
      have_number = true;
      skip();
    }
    Cyclotomic term(coef);
    bool star = false;
    if (i < text.size() && text[i] == '*') {
      if (!have_number) throw fail("unexpected '*'");
      ++i;
      skip();
      star = true;
    }
    if (i < text.size() && text[i] == 'E') {
      ++i;
      if (i >= text.size() || text[i] != '(') throw fail("expected '(' after E");
      ++i;
      skip();
      std::string n = read_uint();
      skip();
      if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
      ++i;
      std::int64_t k = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        int ks = 1;
        if (i < text.size() && text[i] == '-') {
          ks = -1;
          ++i;
        }
        k = ks * std::stoll(read_uint());
      }
      unsigned long nn = std::stoul(n);
      if (nn == 0 || nn > 1'000'000) throw fail("conductor out of range");
      term = Cyclotomic(coef) * root(static_cast<std::uint32_t>(nn), k);
    } else if (star || !have_number) {
      throw fail("expected E(n)");
    }
    total += sign > 0 ? term : -term;
  }
  return total;
}

}  // namespace sgc
