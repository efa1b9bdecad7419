#include "sgc/stabchain.hpp"

#include "sgc/errors.hpp"

namespace sgc {

StabChain::StabChain(std::size_t degree) : n_(degree) {}

StabChain::StabChain(std::size_t degree, std::span<const Perm> gens, std::vector<Point> base_preference)
    : n_(degree), preference_(std::move(base_preference)) {
  for (const Perm& g : gens) add_generator(g);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.point);
  return b;
}

std::vector<std::size_t> StabChain::orbit_lengths() const {
  std::vector<std::size_t> v;
  for (const Level& l : levels_) v.push_back(l.orbit.size());
  return v;
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const Level& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

bool StabChain::order_fits_u64() const {
  BigInt o = order();
  return o.fits_ulong_p();
}

std::uint64_t StabChain::order_u64() const { return to_u64(order()); }

const Perm& StabChain::transversal(std::size_t level, Point pt) const {
  const Level& l = levels_[level];
  if (l.pos[pt] < 0) throw DomainError("point not in fundamental orbit");
  return l.u[static_cast<std::size_t>(l.pos[pt])];
}

std::pair<Perm, std::size_t> StabChain::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    Point beta = g[L.point];
    std::int32_t a = L.pos[beta];
    if (a < 0) return {std::move(g), l};
    g = g * L.u_inv[static_cast<std::size_t>(a)];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != n_) return false;
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

std::uint64_t StabChain::rank_from_base_images(std::vector<Point>& img) const {
  std::uint64_t r = 0;
  const std::size_t k = levels_.size();
  for (std::size_t l = 0; l < k; ++l) {
    const Level& L = levels_[l];
    std::int32_t a = L.pos[img[l]];
    if (a < 0) throw DomainError("element is not a member of the group");
    r += static_cast<std::uint64_t>(a) * L.radix;
    const Perm& ui = L.u_inv[static_cast<std::size_t>(a)];
    for (std::size_t j = l + 1; j < k; ++j) img[j] = ui[img[j]];
  }
  return r;
}

std::uint64_t StabChain::rank(const Perm& g) const {
  std::vector<Point> img(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) img[l] = g[levels_[l].point];
  return rank_from_base_images(img);
}

Perm StabChain::unrank(std::uint64_t r) const {
  Perm g(n_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    std::uint64_t a = (r / L.radix) % L.orbit.size();
    g = g * L.u[a];
  }
  return g;
}

Perm StabChain::random(Rng& rng) const {
  Perm g(n_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    std::uniform_int_distribution<std::size_t> d(0, L.orbit.size() - 1);
    g = g * L.u[d(rng)];
  }
  return g;
}

void StabChain::extend_orbit(Level& L) {
  for (std::size_t a = 0; a < L.orbit.size(); ++a) {
    for (std::size_t s : L.gens) {
      Point img = sgs_[s][L.orbit[a]];
      if (L.pos[img] >= 0) continue;
      L.pos[img] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(img);
      Perm u = L.u[a] * sgs_[s];
      L.u_inv.push_back(u.inverse());
      L.u.push_back(std::move(u));
    }
  }
}

void StabChain::append_level(const Perm& h) {
  Point chosen = 0;
  bool found = false;
  for (Point p : preference_) {
    if (p < n_ && h[p] != p) {
      chosen = p;
      found = true;
      break;
    }
  }
  if (!found) {
    for (std::size_t p = 0; p < n_; ++p) {
      if (h[p] != p) {
        chosen = static_cast<Point>(p);
        found = true;
        break;
      }
    }
  }
  if (!found) throw InternalError("append_level called with identity");
  Level L;
  L.point = chosen;
  L.pos.assign(n_, -1);
  L.pos[chosen] = 0;
  L.orbit.push_back(chosen);
  L.u.emplace_back(n_);
  L.u_inv.emplace_back(n_);
  levels_.push_back(std::move(L));
}

void StabChain::update_radix() {
  std::uint64_t r = 1;
  bool overflow = false;
  for (std::size_t l = levels_.size(); l-- > 0;) {
    levels_[l].radix = overflow ? 0 : r;
    unsigned __int128 next = static_cast<unsigned __int128>(r) * levels_[l].orbit.size();
    if (next > UINT64_MAX) overflow = true;
    else r = static_cast<std::uint64_t>(next);
  }
}

void StabChain::add_generator(const Perm& g) {
  if (g.degree() != n_) throw InputError("generator degree mismatch");
  auto [h, j] = strip(g, 0);
  if (j == levels_.size() && h.is_identity()) return;
  if (j == levels_.size()) append_level(h);
  std::size_t idx = sgs_.size();
  sgs_.push_back(std::move(h));
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].gens.push_back(idx);
    extend_orbit(levels_[l]);
  }
  run(j);
  update_radix();
}

void StabChain::run(std::size_t start) {
  std::size_t i = start;
  while (true) {
    bool restarted = false;
    for (std::size_t a = 0; a < levels_[i].orbit.size() && !restarted; ++a) {
      Point beta = levels_[i].orbit[a];
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        std::size_t s = levels_[i].gens[gi];
        std::uint64_t key = (static_cast<std::uint64_t>(beta) << 32) | s;
        if (!levels_[i].checked.insert(key).second) continue;
        Point img = sgs_[s][beta];
        Perm g = levels_[i].u[a] * sgs_[s] * levels_[i].u_inv[static_cast<std::size_t>(levels_[i].pos[img])];
        if (g.is_identity()) continue;
        auto [h, j] = strip(std::move(g), i + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(h);
        std::size_t idx = sgs_.size();
        sgs_.push_back(std::move(h));
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(idx);
          extend_orbit(levels_[l]);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      if (i == 0) break;
      --i;
    }
  }
}

}  // namespace sgc
