#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sgc/cyclotomic.hpp"
#include "sgc/errors.hpp"

using namespace sgc;

namespace {

std::complex<double> eval(const Cyclotomic& x) {
  std::complex<double> s = 0;
  for (auto& [e, c] : x.terms()) s += c.get_d() * std::polar(1.0, 2 * M_PI * e / x.conductor());
  return s;
}

Cyclotomic random_cyc(std::mt19937_64& rng) {
  static const std::uint32_t ns[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 24};
  Cyclotomic x;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t n = ns[rng() % 12];
    long c = static_cast<long>(rng() % 7) - 3;
    x += Cyclotomic(c) * Cyclotomic::root(n, static_cast<std::int64_t>(rng() % n));
  }
  return x;
}

}  // namespace

TEST(Cyclotomic, BasicIdentities) {
  EXPECT_EQ(Cyclotomic::root(3) + Cyclotomic::root(3, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root(4) * Cyclotomic::root(4), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root(2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root(6), -Cyclotomic::root(3, 2));
  Cyclotomic s2 = Cyclotomic::root(8) - Cyclotomic::root(8, 3);
  EXPECT_EQ(s2 * s2, Cyclotomic(2));
  Cyclotomic r5 = Cyclotomic::root(5) + Cyclotomic::root(5, 4);
  EXPECT_EQ(r5.conj(), r5);
  EXPECT_EQ(r5 * r5 + r5, Cyclotomic(1));  // golden ratio relation
  EXPECT_TRUE((Cyclotomic::root(7) - Cyclotomic::root(7)).is_zero());
  EXPECT_EQ(Cyclotomic::root(7, 7), Cyclotomic(1));
}

TEST(Cyclotomic, ConductorIsMinimal) {
  EXPECT_EQ((Cyclotomic::root(12) * Cyclotomic::root(12, 3)).conductor(), 3u);
  EXPECT_EQ(Cyclotomic::root(15, 5).conductor(), 3u);
  EXPECT_EQ((Cyclotomic::root(9, 3) + Cyclotomic::root(9, 6)).conductor(), 1u);
  EXPECT_EQ(Cyclotomic::root(10).conductor(), 5u);
}

TEST(Cyclotomic, StringRoundTrip) {
  for (std::string s : {"0", "1", "-1/2", "E(7)+E(7)^2+E(7)^4", "-E(7)-E(7)^2-E(7)^4", "2*E(5)^2", "E(4)",
                        "1+E(4)"}) {
    Cyclotomic x = Cyclotomic::parse(s);
    EXPECT_EQ(Cyclotomic::parse(x.str()), x) << s;
    EXPECT_EQ(x.str(), Cyclotomic::parse(x.str()).str());
  }
  EXPECT_EQ(Cyclotomic::parse("E(3)+E(3)^2"), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::parse("-3*E(7)^-1").conductor(), 7u);
  EXPECT_THROW(Cyclotomic::parse("E(7"), InputError);
  EXPECT_THROW(Cyclotomic::parse("1 2"), InputError);
  EXPECT_THROW(Cyclotomic::parse(""), InputError);
}

TEST(Cyclotomic, MatchesFloatingEvaluation) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    Cyclotomic a = random_cyc(rng), b = random_cyc(rng);
    EXPECT_LT(std::abs(eval(a + b) - (eval(a) + eval(b))), 1e-9);
    EXPECT_LT(std::abs(eval(a * b) - eval(a) * eval(b)), 1e-9);
    EXPECT_LT(std::abs(eval(a.conj()) - std::conj(eval(a))), 1e-9);
    EXPECT_EQ(a - a, Cyclotomic());
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(Cyclotomic::parse(a.str()), a);
    // reduced form is idempotent: rebuilding from terms gives the same value
    Cyclotomic rebuilt;
    for (auto& [e, c] : a.terms()) rebuilt += Cyclotomic(c) * Cyclotomic::root(a.conductor(), e);
    EXPECT_EQ(rebuilt, a);
    if (a.is_rational()) EXPECT_LT(std::abs(eval(a).imag()), 1e-12);
  }
}

TEST(Cyclotomic, OrderingIsTotal) {
  EXPECT_LT(Cyclotomic(-1), Cyclotomic(2));
  EXPECT_LT(Cyclotomic(5), Cyclotomic::root(3));
  EXPECT_EQ(Cyclotomic::root(3) <=> Cyclotomic::root(3), std::strong_ordering::equal);
}
