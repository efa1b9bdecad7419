#include "sgc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sgc/errors.hpp"
#include "sgc/numtheory.hpp"

namespace sgc {

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm Perm::from_images(std::vector<Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) throw InputError("image list is not a bijection");
    seen[p] = 1;
  }
  Perm g;
  g.img_ = std::move(images);
  return g;
}

Perm Perm::from_images_1based(const std::vector<int>& images) {
  std::vector<Point> v;
  v.reserve(images.size());
  for (int x : images) {
    if (x < 1 || x > static_cast<int>(images.size()))
      throw InputError("image " + std::to_string(x) + " out of range");
    v.push_back(static_cast<Point>(x - 1));
  }
  return from_images(std::move(v));
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  if (degree > 65535) throw InputError("degree too large");
  Perm g(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("cycle string column " + std::to_string(i + 1) + ": " + why);
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000) throw fail("point too large");
        ++i;
      }
      if (start == i) throw fail("expected a point");
      if (v < 1 || v > degree) throw fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw fail("point " + std::to_string(v) + " repeated");
      used[p] = 1;
      cyc.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) g.img_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return g;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

void multiply_into(const Perm& a, const Perm& b, Perm& out) { out = a * b; }

Perm Perm::operator*(const Perm& rhs) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  std::uint64_t ord = order();
  k %= ord;
  Perm result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Perm Perm::conjugate(const Perm& g) const {
  // (g^-1 x g)(g(i)) = g(x(i))
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

bool Perm::commutes_with(const Perm& o) const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (o.img_[img_[i]] != img_[o.img_[i]]) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (std::size_t len : cycle_type()) o = lcm_u64(o, len);
  return o;
}

std::string Perm::to_cycles() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::vector<int> Perm::to_images_1based() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
  return v;
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : img_) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sgc
