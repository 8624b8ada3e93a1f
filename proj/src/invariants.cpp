#include "conjlab/invariants.hpp"

#include <algorithm>

#include "conjlab/error.hpp"

namespace conjlab {

namespace {

std::uint64_t class_size_of(const Group& g, ElementId e) {
  const auto& cp = g.classes();
  return cp.classes[cp.class_of[e]].size();
}

bool elementwise_commute(const Subgroup& a, const Subgroup& b) {
  const Group& g = a.parent();
  for (ElementId x : a.generators())
    for (ElementId y : b.generators())
      if (!g.commute(x, y)) return false;
  return true;
}

}  // namespace

ClassSizeSet class_size_set(const Group& g) {
  ClassSizeSet out;
  for (const auto& c : conjugacy_classes(g)) {
    out.sizes.insert(c.size());
    ++out.multiplicities[c.size()];
  }
  return out;
}

std::uint64_t index_of(const Subgroup& n, ElementId a) {
  if (a >= n.parent().order()) throw ElementNotInGroup("element id out of range");
  std::uint64_t c = 0;
  for (ElementId y : n.elements())
    if (n.parent().commute(a, y)) ++c;
  return n.order() / c;
}

std::uint64_t index_of(const Subgroup& n, const Permutation& a) {
  return index_of(n, n.parent().id_of(a));
}

std::uint64_t g_double_norm_p(const Group& g, std::uint64_t p) {
  std::uint64_t best = 1;
  for (auto a : class_size_set(g).sizes) best = std::max(best, arith::p_part(a, p));
  return best;
}

std::uint64_t g_double_norm_pi(const Group& g, const std::set<std::uint64_t>& primes) {
  std::uint64_t out = 1;
  for (auto p : primes) out *= g_double_norm_p(g, p);
  return out;
}

std::uint64_t g_double_norm(const Group& g) {
  auto primes = arith::prime_divisors(g.order());
  return g_double_norm_pi(g, {primes.begin(), primes.end()});
}

std::string_view to_string(RpStatus s) {
  switch (s) {
    case RpStatus::NotRp:
      return "NotRp";
    case RpStatus::RpStar:
      return "RpStar";
    case RpStatus::RpStarStar:
      return "RpStarStar";
  }
  return "?";
}

RpClassification classify_rp(const Group& g, std::uint64_t p) {
  std::set<std::uint64_t> nontrivial;
  for (auto a : class_size_set(g).sizes) {
    auto part = arith::p_part(a, p);
    if (part > 1) nontrivial.insert(part);
  }
  RpClassification out;
  if (nontrivial.size() >= 2) return out;
  if (nontrivial.empty()) {
    out.status = RpStatus::RpStarStar;
    return out;
  }
  unsigned alpha = 0;
  for (auto v = *nontrivial.begin(); v > 1; v /= p) ++alpha;
  out.alpha = alpha;

  bool star = false;
  for (ElementId h = 0; h < g.order() && !star; ++h)
    star = is_p_element(g, h, p) && class_size_of(g, h) % p == 0;
  out.status = star ? RpStatus::RpStar : RpStatus::RpStarStar;
  return out;
}

std::vector<bool> p_central_mask(const Group& g, std::uint64_t p) {
  std::vector<bool> mask(g.order(), false);
  const Subgroup sylow = sylow_subgroup(g, p);
  const Group sg = sylow.to_group();
  // Element i of sg is sylow.elements()[i].
  std::vector<ElementId> zp;
  const Subgroup zs = center(sg);
  for (ElementId z : zs.elements()) zp.push_back(sylow.elements()[z]);
  // Z(P^x) = Z(P)^x, and the conjugates of P are all the Sylow p-subgroups.
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId z : zp) mask[g.conj(z, x)] = true;
  return mask;
}

bool is_p_central(const Group& g, ElementId x, std::uint64_t p) {
  if (!arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (x >= g.order()) throw ElementNotInGroup("element id out of range");
  if (!is_p_element(g, x, p))
    throw NotAPElement("element of order " + std::to_string(g.element_order(x)) + " is not a " +
                       std::to_string(p) + "-element");
  return p_central_mask(g, p)[x];
}

bool all_p_elements_p_central(const Group& g, std::uint64_t p) {
  const auto mask = p_central_mask(g, p);
  for (ElementId x = 0; x < g.order(); ++x)
    if (is_p_element(g, x, p) && !mask[x]) return false;
  return true;
}

SylowCommuteCriterion sylow_commute_criterion(const Group& g, std::uint64_t p, std::uint64_t q) {
  if (p == q) throw DomainError("sylow_commute_criterion: primes must differ");
  if (!arith::is_prime(p) || !arith::is_prime(q)) throw DomainError("sylow_commute_criterion: non-prime");

  SylowCommuteCriterion out;
  out.class_side = true;
  for (ElementId e = 1; e < g.order() && out.class_side; ++e) {
    const auto size = class_size_of(g, e);
    if (is_p_element(g, e, q) && size % p == 0) out.class_side = false;
    if (is_p_element(g, e, p) && size % q == 0) out.class_side = false;
  }

  // Conjugating a commuting pair by the same element keeps it commuting, so
  // P can stay fixed while Q runs over its conjugates.
  const Subgroup sp = sylow_subgroup(g, p);
  const Subgroup sq = sylow_subgroup(g, q);
  const auto qs = conjugates(sq);
  out.subgroup_side =
      std::any_of(qs.begin(), qs.end(), [&](const Subgroup& c) { return elementwise_commute(sp, c); });
  return out;
}

}  // namespace conjlab
