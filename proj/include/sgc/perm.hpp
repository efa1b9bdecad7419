#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sgc {

using Point = std::uint16_t;

// Permutation of {0..n-1}; printed 1-based. Right action: (g*h) applies g first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);

  // Throws InputError unless images is a bijection.
  static Perm from_images(std::vector<Point> images);
  static Perm from_images_1based(const std::vector<int>& images);
  // Disjoint-cycle text such as "(1,2,3)(4,5)"; whitespace ignored; "()" is identity.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  Perm conjugate(const Perm& g) const;  // g^-1 * this * g
  bool commutes_with(const Perm& other) const;
  std::uint64_t order() const;
  std::vector<std::size_t> cycle_type() const;  // sorted cycle lengths, fixed points included
  std::string to_cycles() const;
  std::vector<int> to_images_1based() const;
  std::uint64_t hash() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<Point> img_;
};

// out = a * b without reallocation when out already has the right size.
void multiply_into(const Perm& a, const Perm& b, Perm& out);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace sgc
