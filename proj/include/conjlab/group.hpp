#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "conjlab/permutation.hpp"

namespace conjlab {

/// Index of an element in its group's sorted element list. The identity is 0.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 100'000;

struct ConjugacyClass {
  ElementId representative = 0;      // least member
  std::vector<ElementId> members;    // ascending
  std::uint64_t size() const noexcept { return members.size(); }
};

/// Classes ordered by (size, representative); `class_of[e]` indexes `classes`.
struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;
};

/// A finite permutation group with its full element list enumerated.
///
/// Elements are sorted lexicographically by image array, so element ids and
/// every derived ordering are reproducible. Groups are immutable and cheap to
/// copy (shared storage); all queries are safe to call concurrently.
class Group {
 public:
  /// The trivial group of degree 0.
  Group();

  /// Enumerates the closure of `gens`. Throws InvalidPermutation when a
  /// generator has the wrong degree, CapExceeded past `cap` elements.
  static Group from_generators(std::size_t degree, std::vector<Permutation> gens,
                               std::size_t cap = kDefaultElementCap);

  std::size_t degree() const noexcept;
  std::uint64_t order() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  /// Ids of the generators, in generator order.
  const std::vector<ElementId>& generator_ids() const noexcept;

  static constexpr ElementId identity() noexcept { return 0; }

  Permutation element(ElementId e) const;
  std::span<const Point> images(ElementId e) const;

  std::optional<ElementId> find(const Permutation& p) const;
  /// Like find, but throws ElementNotInGroup.
  ElementId id_of(const Permutation& p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const;
  bool commute(ElementId a, ElementId b) const;
  ElementId pow(ElementId a, std::uint64_t k) const;
  std::uint64_t element_order(ElementId a) const;

  /// Points whose images determine an element uniquely.
  const std::vector<Point>& base() const noexcept;

  /// Conjugacy classes, computed once and cached.
  const ClassPartition& classes() const;

  bool is_abelian() const;

  /// True when both handles share the same enumerated storage.
  bool same_as(const Group& other) const noexcept { return d_ == other.d_; }

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Group finish(std::shared_ptr<Data> d);

  std::shared_ptr<const Data> d_;

  friend class Subgroup;
};

/// A subgroup of an enumerated group, stored as a sorted id list plus a
/// membership mask and a small generating set.
class Subgroup {
 public:
  Subgroup() = default;

  /// Throws NotASubgroup unless `members` (any order) is closed under products.
  static Subgroup from_elements(const Group& parent, std::vector<ElementId> members);
  static Subgroup whole(const Group& parent);
  static Subgroup trivial(const Group& parent);

  const Group& parent() const noexcept { return parent_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  bool contains(ElementId e) const { return e < member_.size() && member_[e]; }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }

  /// Standalone group on the same points. Element i of the result is elements()[i].
  Group to_group() const;

  /// Subset test against another subgroup of the same parent.
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  Subgroup(Group parent, std::vector<ElementId> sorted, std::vector<ElementId> gens);

  Group parent_;
  std::vector<ElementId> elements_;
  std::vector<bool> member_;
  std::vector<ElementId> generators_;

  friend Subgroup extend_subgroup(const Subgroup& start, std::span<const ElementId> seed);
};

/// Smallest subgroup containing `start` and `seed`.
Subgroup extend_subgroup(const Subgroup& start, std::span<const ElementId> seed);

}  // namespace conjlab
