#include "conjlab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "conjlab/arith.hpp"
#include "conjlab/error.hpp"

namespace conjlab {

namespace {

using ClassMask = std::vector<std::uint64_t>;

ClassMask class_mask(const Subgroup& h) {
  const auto& cp = h.parent().classes();
  ClassMask mask((cp.classes.size() + 63) / 64, 0);
  for (std::size_t c = 0; c < cp.classes.size(); ++c)
    if (h.contains(cp.classes[c].representative)) mask[c / 64] |= std::uint64_t{1} << (c % 64);
  return mask;
}

bool mask_subset(const ClassMask& a, const ClassMask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

bool lex_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

}  // namespace

const std::vector<ConjugacyClass>& conjugacy_classes(const Group& g) { return g.classes().classes; }

Subgroup centralizer_in(const Subgroup& h, ElementId x) {
  const Group& g = h.parent();
  std::vector<ElementId> c;
  for (ElementId y : h.elements())
    if (g.commute(x, y)) c.push_back(y);
  return Subgroup::from_elements(g, std::move(c));
}

Subgroup centralizer(const Group& g, ElementId x) {
  if (x >= g.order()) throw ElementNotInGroup("element id out of range");
  return centralizer_in(Subgroup::whole(g), x);
}

Subgroup centralizer(const Group& g, const Permutation& x) { return centralizer(g, g.id_of(x)); }

Subgroup center(const Group& g) {
  std::vector<ElementId> z;
  for (ElementId y = 0; y < g.order(); ++y) {
    const auto& gens = g.generator_ids();
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId s) { return g.commute(s, y); }))
      z.push_back(y);
  }
  return Subgroup::from_elements(g, std::move(z));
}

Subgroup subgroup_generated(const Group& g, std::span<const ElementId> seed) {
  for (auto e : seed)
    if (e >= g.order()) throw ElementNotInGroup("element id out of range");
  return extend_subgroup(Subgroup::trivial(g), seed);
}

Subgroup subgroup_generated(const Group& g, const std::vector<Permutation>& seed) {
  std::vector<ElementId> ids;
  for (const auto& p : seed) ids.push_back(g.id_of(p));
  return subgroup_generated(g, ids);
}

Subgroup normal_closure(const Group& g, std::span<const ElementId> seed) {
  std::vector<ElementId> conj_seed;
  const auto& cp = g.classes();
  for (ElementId e : seed) {
    if (e >= g.order()) throw ElementNotInGroup("element id out of range");
    const auto& members = cp.classes[cp.class_of[e]].members;
    conj_seed.insert(conj_seed.end(), members.begin(), members.end());
  }
  return extend_subgroup(Subgroup::trivial(g), conj_seed);
}

bool is_normal(const Subgroup& h) {
  const Group& g = h.parent();
  for (ElementId s : g.generator_ids())
    for (ElementId t : h.generators())
      if (!h.contains(g.conj(t, s))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> common;
  for (ElementId e : a.elements())
    if (b.contains(e)) common.push_back(e);
  return Subgroup::from_elements(a.parent(), std::move(common));
}

Subgroup conjugate(const Subgroup& h, ElementId g) {
  const Group& grp = h.parent();
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (ElementId e : h.elements()) out.push_back(grp.conj(e, g));
  return Subgroup::from_elements(grp, std::move(out));
}

bool is_p_element(const Group& g, ElementId e, std::uint64_t p) {
  std::uint64_t o = g.element_order(e);
  while (o % p == 0) o /= p;
  return o == 1;
}

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = arith::p_part(g.order(), p);
  Subgroup sylow = Subgroup::trivial(g);
  if (target == 1) return sylow;

  for (ElementId e = 1; e < g.order(); ++e)
    if (is_p_element(g, e, p)) {
      const ElementId seed[] = {e};
      sylow = extend_subgroup(sylow, seed);
      break;
    }
  // A p-subgroup below Sylow size has p dividing |N(P) : P|, so a p-element of
  // N(P) \ P exists and <P, y> = P<y> is again a p-group.
  while (sylow.order() < target) {
    const Subgroup norm = normalizer(sylow);
    auto it = std::find_if(norm.elements().begin(), norm.elements().end(), [&](ElementId y) {
      return !sylow.contains(y) && is_p_element(g, y, p);
    });
    const ElementId seed[] = {*it};
    sylow = extend_subgroup(sylow, seed);
  }
  return sylow;
}

std::vector<Subgroup> conjugates(const Subgroup& h) {
  const Group& g = h.parent();
  const Subgroup norm = normalizer(h);
  std::vector<bool> covered(g.order(), false);
  std::vector<Subgroup> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    // h^x = h^y exactly when y lies in the coset N(h) x.
    for (ElementId n : norm.elements()) covered[g.mul(n, x)] = true;
    out.push_back(conjugate(h, x));
  }
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<ElementId> out;
  for (ElementId y = 0; y < g.order(); ++y) {
    const auto& gens = h.generators();
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId t) { return h.contains(g.conj(t, y)); }))
      out.push_back(y);
  }
  return Subgroup::from_elements(g, std::move(out));
}

std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t node_budget) {
  const auto& cp = g.classes();

  // Every normal subgroup is the join of the normal closures of the classes it
  // contains, so the lattice is the join-closure of those closures.
  std::map<ClassMask, Subgroup> found;
  std::vector<std::pair<ClassMask, Subgroup>> closures;
  std::size_t nodes = 0;
  auto charge = [&] {
    if (++nodes > node_budget)
      throw BudgetExceeded("normal-subgroup search exceeded node budget of " +
                           std::to_string(node_budget));
  };

  const Subgroup trivial = Subgroup::trivial(g);
  found.emplace(class_mask(trivial), trivial);
  for (std::size_t c = 1; c < cp.classes.size(); ++c) {
    const ConjugacyClass& cls = cp.classes[c];
    charge();
    Subgroup nc = extend_subgroup(trivial, cls.members);
    ClassMask m = class_mask(nc);
    if (found.emplace(m, nc).second) closures.emplace_back(std::move(m), std::move(nc));
  }

  std::vector<ClassMask> work;
  for (const auto& kv : found) work.push_back(kv.first);
  while (!work.empty()) {
    ClassMask m = std::move(work.back());
    work.pop_back();
    const Subgroup base = found.at(m);
    for (const auto& [cm, closure] : closures) {
      if (mask_subset(cm, m)) continue;
      charge();
      Subgroup join = extend_subgroup(base, closure.generators());
      ClassMask jm = class_mask(join);
      if (found.emplace(jm, join).second) work.push_back(std::move(jm));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Subgroup o_p_prime(const Group& g, std::uint64_t p, const std::vector<Subgroup>& normals) {
  require_prime(p);
  std::vector<ElementId> gens;
  for (const auto& n : normals)
    if (n.order() % p != 0) gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  return extend_subgroup(Subgroup::trivial(g), gens);
}

Subgroup o_p_prime(const Group& g, std::uint64_t p, std::size_t node_budget) {
  return o_p_prime(g, p, normal_subgroups(g, node_budget));
}

bool has_normal_p_complement(const Group& g, std::uint64_t p) {
  require_prime(p);
  std::vector<ElementId> p_prime;
  for (ElementId e = 0; e < g.order(); ++e)
    if (g.element_order(e) % p != 0) p_prime.push_back(e);
  if (p_prime.size() * arith::p_part(g.order(), p) != g.order()) return false;
  return extend_subgroup(Subgroup::trivial(g), p_prime).order() == p_prime.size();
}

Quotient quotient_group(const Subgroup& k, std::size_t cap) {
  if (!is_normal(k)) throw NotNormal("quotient_group: subgroup of order " + std::to_string(k.order()) +
                                     " is not normal");
  const Group& g = k.parent();
  Quotient q;
  q.kernel = k;
  q.coset_of.assign(g.order(), ~std::uint32_t{0});
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != ~std::uint32_t{0}) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElementId n : k.elements()) q.coset_of[g.mul(n, x)] = c;
  }

  const std::size_t index = reps.size();
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = q.coset_of[g.mul(reps[c], s)];
    gens.emplace_back(std::move(img));
  }
  q.group = Group::from_generators(index, std::move(gens), cap);

  // Walk the Cayley graph of G, mapping generators to generators.
  const auto& gs = g.generator_ids();
  const auto& qs = q.group.generator_ids();
  q.projection.assign(g.order(), ~ElementId{0});
  q.projection[Group::identity()] = Group::identity();
  std::vector<ElementId> queue{Group::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      ElementId y = g.mul(queue[i], gs[j]);
      if (q.projection[y] != ~ElementId{0}) continue;
      q.projection[y] = q.group.mul(q.projection[queue[i]], qs[j]);
      queue.push_back(y);
    }
  return q;
}

Group direct_product(const Group& a, const Group& b, std::size_t cap) {
  const std::size_t deg = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) gens.push_back(s.extended(deg));
  for (const auto& s : b.generators()) gens.push_back(s.extended(deg, a.degree()));
  return Group::from_generators(deg, std::move(gens), cap);
}

bool is_internal_direct_product(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent())) return false;
  if (a.order() * b.order() != a.parent().order()) return false;
  if (!is_normal(a) || !is_normal(b)) return false;
  return std::none_of(a.elements().begin() + 1, a.elements().end(),
                      [&](ElementId e) { return b.contains(e); });
}

std::vector<CompositionFactor> composition_factors(const Group& g, std::size_t node_budget,
                                                   MaximalNormalChoice choice) {
  std::vector<CompositionFactor> out;
  Group cur = g;
  while (cur.order() > 1) {
    std::vector<Subgroup> normals = normal_subgroups(cur, node_budget);
    normals.pop_back();  // the whole group sorts last
    std::vector<const Subgroup*> maximal;
    for (const auto& n : normals) {
      bool is_max = std::none_of(normals.begin(), normals.end(), [&](const Subgroup& o) {
        return o.order() > n.order() && n.is_subgroup_of(o);
      });
      if (is_max) maximal.push_back(&n);
    }
    // `normals` is sorted by (order, elements); pick from the matching end.
    const Subgroup* pick = maximal.front();
    if (choice == MaximalNormalChoice::Largest) {
      for (const Subgroup* m : maximal)
        if (m->order() > pick->order()) pick = m;
    }

    bool abelian = true;
    const auto& gens = cur.generator_ids();
    for (std::size_t i = 0; i < gens.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < gens.size() && abelian; ++j) {
        ElementId a = gens[i], b = gens[j];
        ElementId comm = cur.mul(cur.mul(cur.inv(a), cur.inv(b)), cur.mul(a, b));
        abelian = pick->contains(comm);
      }
    out.push_back({cur.order() / pick->order(), abelian});
    cur = pick->to_group();
  }
  return out;
}

}  // namespace conjlab
