#pragma once

// Subgroup-lattice primitives over enumerated permutation groups.

#include <cstdint>
#include <span>
#include <vector>

#include "conjlab/group.hpp"

namespace conjlab {

inline constexpr std::size_t kDefaultNormalBudget = 1'000'000;

const std::vector<ConjugacyClass>& conjugacy_classes(const Group& g);

Subgroup centralizer(const Group& g, ElementId x);
/// Throws ElementNotInGroup.
Subgroup centralizer(const Group& g, const Permutation& x);
/// C_H(x) for a subgroup H; x need only lie in the parent.
Subgroup centralizer_in(const Subgroup& h, ElementId x);
Subgroup center(const Group& g);

Subgroup subgroup_generated(const Group& g, std::span<const ElementId> seed);
/// Throws ElementNotInGroup.
Subgroup subgroup_generated(const Group& g, const std::vector<Permutation>& seed);

/// Smallest normal subgroup containing `seed`.
Subgroup normal_closure(const Group& g, std::span<const ElementId> seed);

bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// h^g = g^-1 h g
Subgroup conjugate(const Subgroup& h, ElementId g);

/// True iff the order of `e` is a power of p (the identity counts).
bool is_p_element(const Group& g, ElementId e, std::uint64_t p);

/// A Sylow p-subgroup, grown deterministically from the least p-element
/// through its normalizer. Trivial when p does not divide |G|.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);

/// Every distinct conjugate of h, in order of first appearance over G.
std::vector<Subgroup> conjugates(const Subgroup& h);

Subgroup normalizer(const Subgroup& h);

/// All normal subgroups ordered by (order, element list). Each is a union of
/// conjugacy classes; the search joins normal closures of classes and counts
/// one node per join. Throws BudgetExceeded past `node_budget` nodes.
std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t node_budget = kDefaultNormalBudget);

/// The largest normal subgroup of order coprime to p.
Subgroup o_p_prime(const Group& g, std::uint64_t p, std::size_t node_budget = kDefaultNormalBudget);
Subgroup o_p_prime(const Group& g, std::uint64_t p, const std::vector<Subgroup>& normals);

/// True iff the elements of order coprime to p form a subgroup.
bool has_normal_p_complement(const Group& g, std::uint64_t p);

/// G/K acting on the right cosets Kg, which are numbered by least member.
struct Quotient {
  Group group;
  Subgroup kernel;
  std::vector<std::uint32_t> coset_of;  // element of G -> coset point
  std::vector<ElementId> projection;    // element of G -> element of the quotient
};

/// Throws NotNormal.
Quotient quotient_group(const Subgroup& k, std::size_t cap = kDefaultElementCap);

/// External direct product on disjoint point blocks [0, deg a) and [deg a, deg a + deg b).
Group direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultElementCap);

/// Both normal, trivial intersection, |A||B| = |G|.
bool is_internal_direct_product(const Subgroup& a, const Subgroup& b);

struct CompositionFactor {
  std::uint64_t order = 0;
  bool is_abelian = true;
  friend bool operator==(const CompositionFactor&, const CompositionFactor&) = default;
  friend auto operator<=>(const CompositionFactor&, const CompositionFactor&) = default;
};

enum class MaximalNormalChoice {
  Largest,   // largest order, then least element list
  Smallest,  // smallest order, then least element list
};

/// Composition factors from the top of a series down; the multiset does not
/// depend on `choice`.
std::vector<CompositionFactor> composition_factors(
    const Group& g, std::size_t node_budget = kDefaultNormalBudget,
    MaximalNormalChoice choice = MaximalNormalChoice::Largest);

}  // namespace conjlab
