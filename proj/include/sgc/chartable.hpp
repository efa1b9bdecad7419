#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/classes.hpp"
#include "sgc/context.hpp"
#include "sgc/cyclotomic.hpp"

namespace sgc {

struct ClassInfo {
  std::string label;
  std::uint64_t element_order = 1;
  BigInt size;
  BigInt centralizer;
  std::map<std::uint64_t, std::size_t> power_map;
  std::size_t inverse_class = 0;
};

class CharacterTable {
 public:
  std::string name;
  BigInt order;
  std::vector<ClassInfo> classes;
  std::vector<std::string> labels;             // character labels
  std::vector<std::vector<Cyclotomic>> irr;    // rows = characters
  std::string provenance;
  std::optional<ClassData> class_data;         // present when computed from a group

  std::size_t num_classes() const { return classes.size(); }
  std::size_t num_characters() const { return irr.size(); }
  std::size_t class_index(std::string_view label) const;
  std::size_t char_index(std::string_view label) const;
  BigInt degree(std::size_t chi) const { return irr[chi][0].integer(); }
  std::uint64_t exponent() const;
  // Both orthogonality relations, exactly; throws ValidationError naming the offending pair.
  void verify() const;
  // Inverse classes from complex conjugation of columns.
  void derive_inverse_classes();
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Dixon-Schneider over F_l, lifted to cyclotomics; labels by degree then value order.
TablePtr character_table(const ClassData& cd, const Context& ctx = {}, std::string name = "");

// Canonical character order and labels ("1a", "10a", "10b", ...); trivial character first.
void assign_default_labels(CharacterTable& t);

struct CharacterPin {
  std::string label;        // e.g. "14b"
  std::string class_label;  // e.g. "3A"
  Cyclotomic value;
};
// Relabels so that the unique character of the label's degree with the given value gets the label.
void apply_character_pins(CharacterTable& t, const std::vector<CharacterPin>& pins);

BigInt class_mult_coefficient(const CharacterTable& t, std::size_t i, std::size_t j, std::size_t k);

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(TablePtr table, std::vector<Cyclotomic> values);
  static ClassFunction zero(TablePtr table);
  static ClassFunction irreducible(TablePtr table, std::size_t i);
  static ClassFunction trivial(TablePtr table) { return irreducible(std::move(table), 0); }

  const TablePtr& table() const { return table_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  Cyclotomic degree() const { return values_.at(0); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator-() const;
  ClassFunction scaled(const Cyclotomic& c) const;
  bool operator==(const ClassFunction& o) const { return table_ == o.table_ && values_ == o.values_; }

 private:
  TablePtr table_;
  std::vector<Cyclotomic> values_;
};

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
// Multiplicities of the irreducibles; DomainError "not a virtual character" if non-integral.
std::vector<BigInt> decompose(const ClassFunction& f);
ClassFunction from_multiplicities(const TablePtr& t, const std::vector<BigInt>& m);
// "1a+10a+10b+2*14b" style; negative multiplicities as "-15a".
std::string format_decomposition(const CharacterTable& t, const std::vector<BigInt>& m);

struct FusionMap {
  TablePtr sub;
  TablePtr ambient;
  std::vector<std::size_t> images;
};

// Both tables must carry class data over the same universe degree; H <= G.
FusionMap fusion_map(const TablePtr& G, const TablePtr& H);
ClassFunction induce(const ClassFunction& f, const FusionMap& fusion);
ClassFunction restrict_to(const ClassFunction& f, const FusionMap& fusion);
// Ind_H^G(1) by counting elements of H in each class of G (no table of H needed).
ClassFunction permutation_character(const TablePtr& G, const Group& H, const Bounds& b = {});
// True iff f vanishes on every class whose element order is divisible by p; else the first such class.
std::optional<std::size_t> p_singular_witness(const ClassFunction& f, std::uint64_t p);

inline std::ostream& operator<<(std::ostream& os, const ClassFunction& f) {
  os << "(";
  for (std::size_t i = 0; i < f.values().size(); ++i) os << (i ? "," : "") << f[i];
  return os << ")";
}

}  // namespace sgc
