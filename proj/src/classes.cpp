#include "sgc/classes.hpp"

#include <algorithm>
#include <numeric>

#include "sgc/errors.hpp"

namespace sgc {

std::vector<std::string> default_class_labels(const std::vector<std::uint64_t>& orders) {
  std::vector<std::string> labels;
  std::map<std::uint64_t, int> seen;
  for (std::uint64_t o : orders) {
    int k = seen[o]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    labels.push_back(std::to_string(o) + suffix);
  }
  return labels;
}

ClassData ClassData::compute(const Group& G, const Context& ctx) {
  BigInt ord = G.order();
  if (ord > ctx.bounds.max_element_index)
    throw ResourceError("group order " + ord.get_str() + " exceeds bound element-index=" +
                        std::to_string(ctx.bounds.max_element_index) + " for element-indexed class data");
  const std::uint64_t n = ord.get_ui();
  const StabChain& ch = G.chain();
  const std::vector<Point> base = ch.base();
  const std::size_t k = base.size();

  auto d = std::make_shared<Data>();
  d->group = G;
  constexpr std::uint16_t kNone = 0xFFFF;
  std::vector<std::uint16_t> class_of(n, kNone);
  std::vector<std::uint32_t> members;
  members.reserve(n);
  std::vector<std::size_t> offsets{0};
  std::vector<Perm> reps;

  std::vector<Perm> gens = G.generators(), gens_inv;
  for (const Perm& s : gens) gens_inv.push_back(s.inverse());
  std::vector<Point> img(k);

  // Sweep the element index; each unassigned element starts a new class closed under conjugation.
  for (std::uint64_t r = 0; r < n; ++r) {
    if (class_of[r] != kNone) continue;
    std::size_t c = reps.size();
    if (c >= kNone) throw ResourceError("more than 65534 conjugacy classes");
    std::size_t start = members.size();
    members.push_back(static_cast<std::uint32_t>(r));
    class_of[r] = static_cast<std::uint16_t>(c);
    Perm best;
    for (std::size_t i = start; i < members.size(); ++i) {
      Perm x = ch.unrank(members[i]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        // base images of s^-1 x s
        for (std::size_t l = 0; l < k; ++l) img[l] = gens[s][x[gens_inv[s][base[l]]]];
        std::uint64_t rr = ch.rank_from_base_images(img);
        if (class_of[rr] == kNone) {
          class_of[rr] = static_cast<std::uint16_t>(c);
          members.push_back(static_cast<std::uint32_t>(rr));
        }
      }
      if (i == start || x < best) best = std::move(x);
    }
    reps.push_back(std::move(best));
    offsets.push_back(members.size());
  }

  const std::size_t m = reps.size();
  std::vector<std::uint64_t> sizes(m), orders(m);
  for (std::size_t c = 0; c < m; ++c) {
    sizes[c] = offsets[c + 1] - offsets[c];
    orders[c] = reps[c].order();
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<std::uint16_t> newidx(m);
  for (std::size_t i = 0; i < m; ++i) newidx[perm[i]] = static_cast<std::uint16_t>(i);
  for (auto& c : class_of) c = newidx[c];

  d->offsets.assign(1, 0);
  d->members.reserve(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t old = perm[i];
    d->members.insert(d->members.end(), members.begin() + static_cast<std::ptrdiff_t>(offsets[old]),
                      members.begin() + static_cast<std::ptrdiff_t>(offsets[old + 1]));
    std::sort(d->members.end() - static_cast<std::ptrdiff_t>(sizes[old]), d->members.end());
    d->offsets.push_back(d->members.size());
  }
  d->class_of = std::move(class_of);

  ClassData out;
  out.d_ = d;
  std::vector<std::uint64_t> sorted_orders;
  for (std::size_t i = 0; i < m; ++i) {
    ConjugacyClass cc;
    cc.representative = reps[perm[i]];
    cc.size = sizes[perm[i]];
    cc.element_order = orders[perm[i]];
    cc.centralizer_order = n / cc.size;
    sorted_orders.push_back(cc.element_order);
    out.classes_.push_back(std::move(cc));
  }
  auto labels = default_class_labels(sorted_orders);
  auto primes = factorize(n);
  for (std::size_t i = 0; i < m; ++i) {
    ConjugacyClass& cc = out.classes_[i];
    cc.label = labels[i];
    for (auto [p, e] : primes) cc.power_map[p] = out.class_of(cc.representative.pow(static_cast<std::int64_t>(p)));
    cc.inverse_class = out.class_of(cc.representative.inverse());
  }
  return out;
}

std::size_t ClassData::class_of(const Perm& g) const { return d_->class_of[d_->group.rank(g)]; }

std::span<const std::uint32_t> ClassData::members(std::size_t c) const {
  return {d_->members.data() + d_->offsets[c], d_->offsets[c + 1] - d_->offsets[c]};
}

std::size_t ClassData::power_class(std::size_t c, std::int64_t k) const {
  return class_of(classes_[c].representative.pow(k));
}

std::size_t ClassData::find(std::string_view label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  throw DomainError("no class labelled '" + std::string(label) + "'");
}

std::vector<std::string> ClassData::labels() const {
  std::vector<std::string> v;
  for (const auto& c : classes_) v.push_back(c.label);
  return v;
}

ClassData ClassData::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != classes_.size()) throw ValidationError("label count does not match class count");
  ClassData out = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) out.classes_[i].label = std::move(labels[i]);
  return out;
}

}  // namespace sgc
