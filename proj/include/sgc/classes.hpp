#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/context.hpp"
#include "sgc/group.hpp"

namespace sgc {

struct ConjugacyClass {
  Perm representative;  // lexicographically least image array in the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
  std::map<std::uint64_t, std::size_t> power_map;  // prime dividing |G| -> class of rep^p
  std::size_t inverse_class = 0;
  std::string label;
};

// Complete conjugacy class data with an element index (class of every element by rank).
// Ordering is canonical: element order, then size, then representative.
class ClassData {
 public:
  ClassData() = default;
  static ClassData compute(const Group& G, const Context& ctx = {});

  const Group& group() const { return d_->group; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const { return classes_.size(); }
  std::size_t class_of(const Perm& g) const;
  std::size_t class_of_rank(std::uint64_t r) const { return d_->class_of[r]; }
  std::span<const std::uint32_t> members(std::size_t c) const;
  // Class of rep(c)^k for any integer k.
  std::size_t power_class(std::size_t c, std::int64_t k) const;
  // Index of a class label; throws DomainError when absent.
  std::size_t find(std::string_view label) const;
  std::vector<std::string> labels() const;
  // Replace labels (validated by the caller against pins).
  ClassData with_labels(std::vector<std::string> labels) const;

 private:
  struct Data {
    Group group;
    std::vector<std::uint16_t> class_of;
    std::vector<std::uint32_t> members;
    std::vector<std::size_t> offsets;
  };
  std::shared_ptr<const Data> d_;
  std::vector<ConjugacyClass> classes_;
};

// Default labels: element order followed by A, B, ... in class order.
std::vector<std::string> default_class_labels(const std::vector<std::uint64_t>& orders);

}  // namespace sgc
