#include "sgc/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modp_linalg.hpp"
#include "sgc/errors.hpp"

namespace sgc {

using detail::Mat;
using detail::Row;

std::size_t CharacterTable::class_index(std::string_view label) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return i;
  throw DomainError("table " + name + " has no class '" + std::string(label) + "'");
}

std::size_t CharacterTable::char_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw DomainError("table " + name + " has no character '" + std::string(label) + "'");
}

std::uint64_t CharacterTable::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes) e = lcm_u64(e, c.element_order);
  return e;
}

void CharacterTable::verify() const {
  const std::size_t k = classes.size();
  if (irr.size() != k) throw ValidationError("table " + name + ": " + std::to_string(irr.size()) +
                                             " characters for " + std::to_string(k) + " classes");
  BigInt total = 0;
  for (const auto& c : classes) {
    if (c.size * c.centralizer != order)
      throw ValidationError("table " + name + ": class " + c.label + " size times centralizer differs from |G|");
    total += c.size;
  }
  if (total != order) throw ValidationError("table " + name + ": class sizes do not sum to |G|");
  for (const auto& row : irr)
    if (row.size() != k) throw ValidationError("table " + name + ": ragged character row");
  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) conj[i][c] = irr[i][c].conj();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c) s += Cyclotomic(Rational(classes[c].size)) * irr[i][c] * conj[j][c];
      Cyclotomic want = i == j ? Cyclotomic(Rational(order)) : Cyclotomic();
      if (s != want)
        throw ValidationError("table " + name + ": row orthogonality fails for characters " + labels.at(i) + " and " +
                              labels.at(j));
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i) s += irr[i][a] * conj[i][b];
      Cyclotomic want = a == b ? Cyclotomic(Rational(classes[a].centralizer)) : Cyclotomic();
      if (s != want)
        throw ValidationError("table " + name + ": column orthogonality fails for classes " + classes[a].label + " and " +
                              classes[b].label);
    }
}

void CharacterTable::derive_inverse_classes() {
  const std::size_t k = classes.size();
  for (std::size_t a = 0; a < k; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < k && !found; ++b) {
      bool ok = true;
      for (std::size_t i = 0; i < irr.size() && ok; ++i)
        if (irr[i][b] != irr[i][a].conj()) ok = false;
      if (ok) {
        classes[a].inverse_class = b;
        found = true;
      }
    }
    if (!found) throw ValidationError("table " + name + ": no inverse class for " + classes[a].label);
  }
}

void assign_default_labels(CharacterTable& t) {
  const std::size_t k = t.irr.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    for (const auto& v : t.irr[i])
      if (v != Cyclotomic(1)) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    BigInt da = t.degree(a), db = t.degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(t.irr[a].begin(), t.irr[a].end(), t.irr[b].begin(), t.irr[b].end());
  });
  std::vector<std::vector<Cyclotomic>> sorted;
  for (std::size_t i : idx) sorted.push_back(t.irr[i]);
  t.irr = std::move(sorted);
  t.labels.clear();
  std::map<BigInt, int> count;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt d = t.degree(i);
    int c = count[d]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + c % 26));
      c = c / 26 - 1;
    } while (c >= 0);
    t.labels.push_back(d.get_str() + suffix);
  }
}

void apply_character_pins(CharacterTable& t, const std::vector<CharacterPin>& pins) {
  for (const auto& pin : pins) {
    std::size_t digits = 0;
    while (digits < pin.label.size() && std::isdigit(static_cast<unsigned char>(pin.label[digits]))) ++digits;
    if (digits == 0) throw ValidationError("character pin '" + pin.label + "' lacks a degree");
    BigInt deg(pin.label.substr(0, digits));
    std::size_t cls = t.class_index(pin.class_label);
    std::vector<std::size_t> match;
    for (std::size_t i = 0; i < t.irr.size(); ++i)
      if (t.degree(i) == deg && t.irr[i][cls] == pin.value) match.push_back(i);
    if (match.size() != 1)
      throw ValidationError("character pin " + pin.label + " (" + pin.class_label + "=" + pin.value.str() + ") matches " +
                            std::to_string(match.size()) + " characters");
    std::size_t target = match[0];
    auto holder = std::find(t.labels.begin(), t.labels.end(), pin.label);
    if (holder == t.labels.end()) throw ValidationError("character pin " + pin.label + " names no existing label");
    std::swap(*holder, t.labels[target]);
  }
}

namespace {

// Eigenspace splitting state: a subspace given by an RREF basis.
struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Space make_space(Mat rows, std::uint64_t l) {
  Space s;
  s.pivots = detail::rref(rows, l);
  s.basis = std::move(rows);
  return s;
}

}  // namespace

TablePtr character_table(const ClassData& cd, const Context& ctx, std::string name) {
  const std::size_t k = cd.size();
  if (k > ctx.bounds.max_classes)
    throw ResourceError(std::to_string(k) + " classes exceed bound classes=" + std::to_string(ctx.bounds.max_classes));
  const Group& G = cd.group();
  const std::uint64_t order = G.order_u64();
  std::uint64_t e = 1;
  for (const auto& c : cd.classes()) e = lcm_u64(e, c.element_order);
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  std::uint64_t l = e + 1;
  while (static_cast<double>(l) <= bound || !is_prime(l)) l += e;
  if (l >= (1ULL << 31)) throw ResourceError("Dixon-Schneider prime too large");

  const StabChain& ch = G.chain();
  const std::vector<Point> base = ch.base();
  std::vector<std::uint64_t> sizes_mod(k), inv_sizes(k);
  for (std::size_t c = 0; c < k; ++c) {
    sizes_mod[c] = cd[c].size % l;
    inv_sizes[c] = invmod(sizes_mod[c], l);
  }

  auto class_matrix = [&](std::size_t j) {
    Mat a(k, Row(k, 0));
    std::vector<Point> img(base.size());
    for (std::uint32_t r : cd.members(j)) {
      Perm x_inv = ch.unrank(r).inverse();
      for (std::size_t s = 0; s < k; ++s) {
        const Perm& z = cd[s].representative;
        for (std::size_t b = 0; b < base.size(); ++b) img[b] = z[x_inv[base[b]]];
        std::size_t rc = cd.class_of_rank(ch.rank_from_base_images(img));
        a[rc][s] += 1;
      }
    }
    for (auto& row : a)
      for (auto& v : row) v %= l;
    return a;
  };

  std::vector<std::size_t> order_idx(k);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) { return cd[a].size < cd[b].size; });

  Mat identity(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Space> spaces{make_space(identity, l)};
  for (std::size_t j : order_idx) {
    if (j == 0) continue;
    bool all_one = std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; });
    if (all_one) break;
    Mat A = class_matrix(j);
    std::vector<Space> next;
    for (Space& V : spaces) {
      const std::size_t d = V.basis.size();
      if (d == 1) {
        next.push_back(std::move(V));
        continue;
      }
      // Restriction of A to V in the coordinates given by pivot entries.
      Mat R(d, Row(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        const Row& b = V.basis[i];
        for (std::size_t t = 0; t < d; ++t) {
          std::size_t row = V.pivots[t];
          std::uint64_t acc = 0;
          for (std::size_t s = 0; s < k; ++s) acc = (acc + A[row][s] * b[s]) % l;
          R[t][i] = acc;
        }
      }
      Row cp = detail::charpoly(R, l);
      std::size_t covered = 0;
      for (std::uint64_t lam = 0; lam < l && covered < d; ++lam) {
        if (detail::eval_poly(cp, lam, l) != 0) continue;
        Mat M = R;
        for (std::size_t t = 0; t < d; ++t) M[t][t] = detail::subm(M[t][t], lam, l);
        Mat ns = detail::nullspace(M, l);
        Mat vecs;
        for (const Row& c : ns) {
          Row v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t s = 0; s < k; ++s) v[s] = (v[s] + c[i] * V.basis[i][s]) % l;
          vecs.push_back(std::move(v));
        }
        covered += vecs.size();
        next.push_back(make_space(std::move(vecs), l));
      }
      if (covered != d) throw InternalError("class matrix not diagonalizable over the chosen prime field");
    }
    spaces = std::move(next);
  }
  for (const Space& s : spaces)
    if (s.basis.size() != 1) throw InternalError("Dixon-Schneider splitting incomplete");

  const std::uint64_t z = primitive_root(l);
  std::vector<std::vector<std::size_t>> power_classes(k);
  for (std::size_t c = 0; c < k; ++c) {
    Perm g = cd[c].representative, acc = G.identity();
    for (std::uint64_t t = 0; t < cd[c].element_order; ++t) {
      power_classes[c].push_back(cd.class_of(acc));
      acc = acc * g;
    }
  }

  auto table = std::make_shared<CharacterTable>();
  table->name = std::move(name);
  table->order = BigInt(static_cast<unsigned long>(order));
  table->class_data = cd;
  for (const auto& c : cd.classes()) {
    ClassInfo ci;
    ci.label = c.label;
    ci.element_order = c.element_order;
    ci.size = BigInt(static_cast<unsigned long>(c.size));
    ci.centralizer = BigInt(static_cast<unsigned long>(c.centralizer_order));
    ci.power_map = c.power_map;
    ci.inverse_class = c.inverse_class;
    table->classes.push_back(std::move(ci));
  }
  const std::uint64_t max_deg = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  for (const Space& s : spaces) {
    Row w = s.basis[0];
    std::uint64_t inv0 = invmod(w[0], l);
    for (auto& x : w) x = w.size() ? x * inv0 % l : x;
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < k; ++c)
      sum = (sum + w[c] * w[cd[c].inverse_class] % l * inv_sizes[c]) % l;
    std::uint64_t sq = order % l * invmod(sum, l) % l;
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d <= max_deg; ++d)
      if (d * d % l == sq) {
        deg = d;
        break;
      }
    if (deg == 0) throw InternalError("no character degree matches the central character");
    Row chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = deg * w[c] % l * inv_sizes[c] % l;
    std::vector<Cyclotomic> values(k);
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint64_t n = cd[c].element_order;
      const std::uint64_t zeta = powmod(z, (l - 1) / n, l), zeta_inv = invmod(zeta, l), n_inv = invmod(n % l, l);
      std::vector<Cyclotomic::Term> terms;
      std::uint64_t zi = 1;  // zeta^-i
      Cyclotomic v;
      for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0, zit = 1;  // zeta^{-i t}
        for (std::uint64_t t = 0; t < n; ++t) {
          acc = (acc + chi[power_classes[c][t]] * zit) % l;
          zit = zit * zi % l;
        }
        std::uint64_t m = acc * n_inv % l;
        if (m > deg) throw InternalError("eigenvalue multiplicity out of range while lifting");
        if (m) v += Cyclotomic(static_cast<long>(m)) * Cyclotomic::root(static_cast<std::uint32_t>(n), static_cast<std::int64_t>(i));
        zi = zi * zeta_inv % l;
      }
      values[c] = std::move(v);
    }
    if (values[0] != Cyclotomic(static_cast<long>(deg))) throw InternalError("lifted degree mismatch");
    table->irr.push_back(std::move(values));
  }
  assign_default_labels(*table);
  table->verify();
  return table;
}

BigInt class_mult_coefficient(const CharacterTable& t, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = t.num_classes();
  if (i >= n || j >= n || k >= n) throw DomainError("class index out of range");
  Cyclotomic s;
  for (std::size_t chi = 0; chi < t.num_characters(); ++chi)
    s += t.irr[chi][i] * t.irr[chi][j] * t.irr[chi][k].conj() / Rational(t.degree(chi));
  s = s * Cyclotomic(Rational(t.classes[i].size * t.classes[j].size, t.order));
  if (!s.is_integer() || s.integer() < 0)
    throw InternalError("class multiplication coefficient " + s.str() + " is not a nonnegative integer");
  return s.integer();
}

ClassFunction::ClassFunction(TablePtr table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (!table_ || values_.size() != table_->num_classes()) throw DomainError("class function length mismatch");
}

ClassFunction ClassFunction::zero(TablePtr table) {
  std::size_t k = table->num_classes();
  return ClassFunction(std::move(table), std::vector<Cyclotomic>(k));
}

ClassFunction ClassFunction::irreducible(TablePtr table, std::size_t i) {
  auto values = table->irr.at(i);
  return ClassFunction(std::move(table), std::move(values));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (table_ != o.table_) throw DomainError("class functions on different tables");
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return ClassFunction(table_, std::move(v));
}

ClassFunction ClassFunction::operator-() const {
  auto v = values_;
  for (auto& x : v) x = -x;
  return ClassFunction(table_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + (-o); }

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
  auto v = values_;
  for (auto& x : v) x *= c;
  return ClassFunction(table_, std::move(v));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.table() != b.table()) throw DomainError("class functions on different tables");
  const auto& t = *a.table();
  Cyclotomic s;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    s += Cyclotomic(Rational(t.classes[c].size)) * a[c] * b[c].conj();
  return s / Rational(t.order);
}

std::vector<BigInt> decompose(const ClassFunction& f) {
  const auto& t = f.table();
  std::vector<BigInt> m;
  for (std::size_t i = 0; i < t->num_characters(); ++i) {
    Cyclotomic ip = inner_product(f, ClassFunction::irreducible(t, i));
    if (!ip.is_integer()) throw DomainError("not a virtual character (inner product with " + t->labels[i] + " is " + ip.str() + ")");
    m.push_back(ip.integer());
  }
  if (from_multiplicities(t, m) != f) throw DomainError("not a virtual character (reconstruction differs)");
  return m;
}

ClassFunction from_multiplicities(const TablePtr& t, const std::vector<BigInt>& m) {
  ClassFunction f = ClassFunction::zero(t);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) f = f + ClassFunction::irreducible(t, i).scaled(Cyclotomic(Rational(m[i])));
  return f;
}

std::string format_decomposition(const CharacterTable& t, const std::vector<BigInt>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    BigInt a = abs(m[i]);
    std::string term = (a == 1 ? "" : a.get_str() + "*") + t.labels[i];
    if (m[i] < 0) s += "-";
    else if (!s.empty()) s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

FusionMap fusion_map(const TablePtr& G, const TablePtr& H) {
  if (!G->class_data || !H->class_data) throw DependencyError("fusion needs tables computed from groups");
  const ClassData& cg = *G->class_data;
  const ClassData& ch = *H->class_data;
  if (!cg.group().contains(ch.group())) throw DomainError("subgroup not contained in the group");
  FusionMap fm{H, G, {}};
  for (std::size_t c = 0; c < ch.size(); ++c) {
    std::size_t img = cg.class_of(ch[c].representative);
    if (cg[img].element_order != ch[c].element_order) throw InternalError("fusion does not preserve element order");
    fm.images.push_back(img);
  }
  for (std::size_t c = 0; c < ch.size(); ++c)
    for (auto [p, pc] : ch[c].power_map) {
      auto it = cg[fm.images[c]].power_map.find(p);
      if (it != cg[fm.images[c]].power_map.end() && it->second != fm.images[pc])
        throw InternalError("fusion does not commute with power maps");
    }
  return fm;
}

ClassFunction induce(const ClassFunction& f, const FusionMap& fusion) {
  if (f.table() != fusion.sub) throw DomainError("class function does not live on the fusion's subgroup table");
  const auto& G = *fusion.ambient;
  const auto& H = *fusion.sub;
  std::vector<Cyclotomic> v(G.num_classes());
  for (std::size_t c = 0; c < H.num_classes(); ++c)
    v[fusion.images[c]] += Cyclotomic(Rational(H.classes[c].size)) * f[c];
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    v[c] = v[c] * Cyclotomic(Rational(G.classes[c].centralizer, H.order));
  return ClassFunction(fusion.ambient, std::move(v));
}

ClassFunction restrict_to(const ClassFunction& f, const FusionMap& fusion) {
  if (f.table() != fusion.ambient) throw DomainError("class function does not live on the fusion's ambient table");
  std::vector<Cyclotomic> v;
  for (std::size_t img : fusion.images) v.push_back(f[img]);
  return ClassFunction(fusion.sub, std::move(v));
}

ClassFunction permutation_character(const TablePtr& G, const Group& H, const Bounds& b) {
  if (!G->class_data) throw DependencyError("permutation character needs a table computed from a group");
  const ClassData& cd = *G->class_data;
  std::vector<std::uint64_t> count(cd.size(), 0);
  for (const Perm& h : H.elements(b)) ++count[cd.class_of(h)];
  std::vector<Cyclotomic> v;
  BigInt hord = H.order();
  for (std::size_t c = 0; c < cd.size(); ++c)
    v.emplace_back(Rational(G->classes[c].centralizer * static_cast<unsigned long>(count[c]), hord));
  return ClassFunction(G, std::move(v));
}

std::optional<std::size_t> p_singular_witness(const ClassFunction& f, std::uint64_t p) {
  const auto& t = *f.table();
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    if (t.classes[c].element_order % p == 0 && !f[c].is_zero()) return c;
  return std::nullopt;
}

}  // namespace sgc
