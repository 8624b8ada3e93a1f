#pragma once

// Class-size invariants: N(G), indices, |G||_p, the R(p) trichotomy,
// p-centrality and the commuting-Sylow criterion.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "conjlab/arith.hpp"
#include "conjlab/structure.hpp"

namespace conjlab {

struct ClassSizeSet {
  arith::IntSet sizes;                                   // ascending, contains 1
  std::map<std::uint64_t, std::uint64_t> multiplicities;  // size -> number of classes

  friend bool operator==(const ClassSizeSet&, const ClassSizeSet&) = default;
};

ClassSizeSet class_size_set(const Group& g);

/// Ind(N, a) = |N| / |C_N(a)|. `a` must lie in the parent of `n`.
std::uint64_t index_of(const Subgroup& n, ElementId a);
/// Throws ElementNotInGroup.
std::uint64_t index_of(const Subgroup& n, const Permutation& a);

/// |G||_p: the largest p-part among the class sizes.
std::uint64_t g_double_norm_p(const Group& g, std::uint64_t p);
std::uint64_t g_double_norm_pi(const Group& g, const std::set<std::uint64_t>& primes);
/// |G||: the product over all primes dividing |G|.
std::uint64_t g_double_norm(const Group& g);

enum class RpStatus { NotRp, RpStar, RpStarStar };

std::string_view to_string(RpStatus s);

struct RpClassification {
  RpStatus status = RpStatus::NotRp;
  /// Exponent of the single non-trivial p-part; empty when every p-part is 1.
  std::optional<unsigned> alpha;

  friend bool operator==(const RpClassification&, const RpClassification&) = default;
};

RpClassification classify_rp(const Group& g, std::uint64_t p);

/// True iff x lies in the center of some Sylow p-subgroup.
/// Throws NotAPElement.
bool is_p_central(const Group& g, ElementId x, std::uint64_t p);
bool all_p_elements_p_central(const Group& g, std::uint64_t p);

/// Centers of all Sylow p-subgroups, united.
std::vector<bool> p_central_mask(const Group& g, std::uint64_t p);

struct SylowCommuteCriterion {
  bool class_side = false;     // no q-class size divisible by p and vice versa
  bool subgroup_side = false;  // some Sylow p- and Sylow q-subgroup commute elementwise
};

/// Throws DomainError when p == q or either is not prime.
SylowCommuteCriterion sylow_commute_criterion(const Group& g, std::uint64_t p, std::uint64_t q);

}  // namespace conjlab
