#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgc/context.hpp"
#include "sgc/numtheory.hpp"
#include "sgc/perm.hpp"

namespace sgc {

// Base and strong generating set built by deterministic incremental Schreier-Sims.
// Elements have an exact rank in [0, |G|) via the mixed radix of transversal indices.
class StabChain {
 public:
  StabChain() = default;
  explicit StabChain(std::size_t degree);
  // base_preference lists points in the order they should be tried as base points.
  StabChain(std::size_t degree, std::span<const Perm> gens, std::vector<Point> base_preference = {});

  void add_generator(const Perm& g);

  std::size_t degree() const { return n_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  const std::vector<Perm>& strong_generators() const { return sgs_; }
  BigInt order() const;
  bool order_fits_u64() const;
  std::uint64_t order_u64() const;

  bool contains(const Perm& g) const;
  // Rank of a member (not checked; use contains first for foreign elements).
  std::uint64_t rank(const Perm& g) const;
  // Rank of the element whose base images are given (modified in place).
  std::uint64_t rank_from_base_images(std::vector<Point>& images) const;
  Perm unrank(std::uint64_t r) const;
  Perm random(Rng& rng) const;

  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  const Perm& transversal(std::size_t level, Point pt) const;

 private:
  struct Level {
    Point point = 0;
    std::vector<std::size_t> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Perm> u, u_inv;
    std::unordered_set<std::uint64_t> checked;
    std::uint64_t radix = 1;  // product of orbit lengths of deeper levels
  };

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void extend_orbit(Level& level);
  void append_level(const Perm& h);
  void run(std::size_t start);
  void update_radix();

  std::size_t n_ = 0;
  std::vector<Perm> sgs_;
  std::vector<Level> levels_;
  std::vector<Point> preference_;
};

}  // namespace sgc
