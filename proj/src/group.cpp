#include "sgc/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgc/errors.hpp"

namespace sgc {

struct Group::Data {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  StabChain chain;
};

namespace {

// Points ordered by the size of their orbit under gens, largest first.
std::vector<Point> base_preference(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<std::size_t> orbit_size(n, 0);
  std::vector<int> comp(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> orb{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const Perm& g : gens) {
        Point q = g[orb[i]];
        if (comp[q] < 0) {
          comp[q] = static_cast<int>(s);
          orb.push_back(q);
        }
      }
    }
    for (std::size_t x : orb) orbit_size[x] = orb.size();
  }
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::stable_sort(pts.begin(), pts.end(), [&](Point a, Point b) { return orbit_size[a] > orbit_size[b]; });
  return pts;
}

}  // namespace

Group::Group() : d_(std::make_shared<Data>()) {}

Group Group::build(std::vector<Perm> generators, std::size_t degree) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (Perm& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree " + std::to_string(g.degree()) +
                                               " does not match group degree " + std::to_string(degree));
    if (!g.is_identity()) d->gens.push_back(std::move(g));
  }
  d->chain = StabChain(degree, d->gens, base_preference(d->gens, degree));
  Group G;
  G.d_ = std::move(d);
  return G;
}

Group Group::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Perm::from_images(cyc));
    std::vector<Point> tr(n);
    std::iota(tr.begin(), tr.end(), Point{0});
    std::swap(tr[0], tr[1]);
    gens.push_back(Perm::from_images(tr));
  }
  return build(std::move(gens), n);
}

Group Group::alternating(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<Point> c3(n);
    std::iota(c3.begin(), c3.end(), Point{0});
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    gens.push_back(Perm::from_images(c3));
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    std::size_t start = n % 2 == 1 ? 0 : 1;
    for (std::size_t i = start; i < n; ++i) cyc[i] = static_cast<Point>(i + 1 < n ? i + 1 : start);
    gens.push_back(Perm::from_images(cyc));
  }
  return build(std::move(gens), n);
}

std::size_t Group::degree() const { return d_->degree; }
const std::vector<Perm>& Group::generators() const { return d_->gens; }
const StabChain& Group::chain() const { return d_->chain; }
BigInt Group::order() const { return d_->chain.order(); }
std::uint64_t Group::order_u64() const { return d_->chain.order_u64(); }

bool Group::contains(const Perm& g) const { return d_->chain.contains(g); }

bool Group::contains(const Group& h) const {
  if (h.degree() != degree()) return false;
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Perm> Group::elements(const Bounds& b) const {
  BigInt ord = order();
  if (ord > b.max_subgroup_elements)
    throw ResourceError("enumerating " + ord.get_str() + " elements exceeds bound subgroup-elements=" +
                        std::to_string(b.max_subgroup_elements));
  std::uint64_t n = ord.get_ui();
  std::vector<Perm> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(element(r));
  return out;
}

std::vector<std::uint64_t> Group::element_key(const Group& universe, const Bounds& b) const {
  std::vector<std::uint64_t> key;
  for (const Perm& g : elements(b)) key.push_back(universe.rank(g));
  std::sort(key.begin(), key.end());
  return key;
}

std::string Group::describe() const {
  std::ostringstream os;
  os << "degree " << degree() << ", order " << order().get_str() << ", base length " << chain().length();
  return os.str();
}

SubgroupRef make_subgroup(const Group& parent, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (!parent.contains(g)) throw DomainError("generator " + g.to_cycles() + " is not in the parent group");
  return SubgroupRef{Group::build(std::move(gens), parent.degree()), parent};
}

}  // namespace sgc
