#include "conjlab/group.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>

#include "conjlab/error.hpp"

namespace conjlab {

namespace {

constexpr ElementId kEmpty = ~ElementId{0};
constexpr std::size_t kMaxBase = 64;
// Upper bound on stored image entries (elements * degree) before giving up.
constexpr std::size_t kMaxStoredPoints = std::size_t{1} << 28;

std::uint64_t hash_points(const Point* p, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return h ^ (h >> 31);
}

std::size_t table_size_for(std::size_t n) {
  std::size_t s = 16;
  while (s < 2 * n + 2) s <<= 1;
  return s;
}

}  // namespace

struct Group::Data {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<ElementId> gen_ids;
  std::size_t order = 0;
  std::vector<Point> rows;  // order * degree
  std::vector<Point> base;
  std::vector<ElementId> slots;
  std::vector<ElementId> inverse;
  std::vector<std::uint64_t> orders;

  mutable std::once_flag classes_once;
  mutable ClassPartition classes;

  const Point* row(ElementId e) const { return rows.data() + std::size_t{e} * degree; }

  ElementId lookup_key(const Point* key) const {
    const std::size_t mask = slots.size() - 1;
    std::size_t h = hash_points(key, base.size()) & mask;
    for (;; h = (h + 1) & mask) {
      ElementId e = slots[h];
      if (e == kEmpty) return kEmpty;
      const Point* r = row(e);
      bool eq = true;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (r[base[i]] != key[i]) {
          eq = false;
          break;
        }
      if (eq) return e;
    }
  }

  ElementId lookup_row(const Point* full) const {
    std::array<Point, kMaxBase> key{};
    for (std::size_t i = 0; i < base.size(); ++i) key[i] = full[base[i]];
    ElementId e = lookup_key(key.data());
    if (e == kEmpty) return kEmpty;
    return std::equal(full, full + degree, row(e)) ? e : kEmpty;
  }
};

Group::Group() : Group(finish([] {
                   auto d = std::make_shared<Data>();
                   d->order = 1;
                   return d;
                 }())) {}

Group Group::from_generators(std::size_t degree, std::vector<Permutation> gens, std::size_t cap) {
  if (cap == 0) throw CapExceeded("element cap must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidPermutation("generator " + g.to_cycle_string() + " has degree " +
                               std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = gens;
  d->rows.resize(degree);
  std::iota(d->rows.begin(), d->rows.end(), Point{0});
  std::size_t count = 1;

  // Open-addressing set over full image rows, keyed by element index.
  std::vector<ElementId> table(table_size_for(64), kEmpty);
  auto insert_or_find = [&](ElementId id) -> ElementId {
    const std::size_t mask = table.size() - 1;
    const Point* r = d->rows.data() + std::size_t{id} * degree;
    for (std::size_t h = hash_points(r, degree) & mask;; h = (h + 1) & mask) {
      if (table[h] == kEmpty) {
        table[h] = id;
        return id;
      }
      const Point* o = d->rows.data() + std::size_t{table[h]} * degree;
      if (std::equal(r, r + degree, o)) return table[h];
    }
  };
  auto rehash = [&] {
    std::vector<ElementId> old(table_size_for(count * 2), kEmpty);
    table.swap(old);
    for (ElementId id = 0; id < count; ++id) insert_or_find(id);
  };
  insert_or_find(0);

  std::vector<Point> cand(degree);
  for (std::size_t next = 0; next < count; ++next) {
    for (const auto& g : gens) {
      const Point* r = d->rows.data() + next * degree;
      for (std::size_t i = 0; i < degree; ++i) cand[i] = g[r[i]];
      d->rows.insert(d->rows.end(), cand.begin(), cand.end());
      auto id = static_cast<ElementId>(count);
      if (insert_or_find(id) != id) {
        d->rows.resize(d->rows.size() - degree);
        continue;
      }
      ++count;
      if (count > cap)
        throw CapExceeded("group closure exceeds element cap of " + std::to_string(cap));
      if (count * degree > kMaxStoredPoints)
        throw CapExceeded("group of degree " + std::to_string(degree) +
                          " too large to store past " + std::to_string(count) + " elements");
      if (2 * count > table.size()) rehash();
    }
  }
  d->order = count;

  // Lexicographic element order.
  std::vector<ElementId> perm(count);
  std::iota(perm.begin(), perm.end(), ElementId{0});
  std::sort(perm.begin(), perm.end(), [&](ElementId a, ElementId b) {
    const Point* ra = d->rows.data() + std::size_t{a} * degree;
    const Point* rb = d->rows.data() + std::size_t{b} * degree;
    return std::lexicographical_compare(ra, ra + degree, rb, rb + degree);
  });
  std::vector<Point> sorted(count * degree);
  for (std::size_t i = 0; i < count; ++i)
    std::copy_n(d->rows.data() + std::size_t{perm[i]} * degree, degree, sorted.data() + i * degree);
  d->rows.swap(sorted);
  return finish(std::move(d));
}

Group Group::finish(std::shared_ptr<Data> d) {
  const std::size_t n = d->order;
  const std::size_t deg = d->degree;

  // Greedy base: add a point whenever the running pointwise stabilizer moves it.
  std::vector<ElementId> stab(n);
  std::iota(stab.begin(), stab.end(), ElementId{0});
  for (Point p = 0; p < deg && stab.size() > 1; ++p) {
    bool moved = std::any_of(stab.begin(), stab.end(), [&](ElementId e) { return d->row(e)[p] != p; });
    if (!moved) continue;
    d->base.push_back(p);
    std::erase_if(stab, [&](ElementId e) { return d->row(e)[p] != p; });
  }
  assert(d->base.size() <= kMaxBase);

  d->slots.assign(table_size_for(n), kEmpty);
  const std::size_t mask = d->slots.size() - 1;
  std::array<Point, kMaxBase> key{};
  for (ElementId e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < d->base.size(); ++i) key[i] = d->row(e)[d->base[i]];
    std::size_t h = hash_points(key.data(), d->base.size()) & mask;
    while (d->slots[h] != kEmpty) h = (h + 1) & mask;
    d->slots[h] = e;
  }

  d->inverse.resize(n);
  d->orders.resize(n);
  std::vector<Point> inv(deg);
  std::vector<bool> seen(deg);
  for (ElementId e = 0; e < n; ++e) {
    const Point* r = d->row(e);
    for (Point i = 0; i < deg; ++i) inv[r[i]] = i;
    d->inverse[e] = d->lookup_row(inv.data());
    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t ord = 1;
    for (Point s = 0; s < deg; ++s) {
      if (seen[s]) continue;
      std::uint64_t len = 0;
      for (Point q = s; !seen[q]; q = r[q]) {
        seen[q] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    d->orders[e] = ord;
  }

  for (const auto& g : d->gens) d->gen_ids.push_back(d->lookup_row(g.images().data()));
  return Group(std::shared_ptr<const Data>(std::move(d)));
}

std::size_t Group::degree() const noexcept { return d_->degree; }
std::uint64_t Group::order() const noexcept { return d_->order; }
const std::vector<Permutation>& Group::generators() const noexcept { return d_->gens; }
const std::vector<ElementId>& Group::generator_ids() const noexcept { return d_->gen_ids; }
const std::vector<Point>& Group::base() const noexcept { return d_->base; }

Permutation Group::element(ElementId e) const {
  const Point* r = d_->row(e);
  return Permutation(std::vector<Point>(r, r + d_->degree));
}

std::span<const Point> Group::images(ElementId e) const { return {d_->row(e), d_->degree}; }

std::optional<ElementId> Group::find(const Permutation& p) const {
  if (p.degree() != d_->degree) return std::nullopt;
  ElementId e = d_->lookup_row(p.images().data());
  if (e == kEmpty) return std::nullopt;
  return e;
}

ElementId Group::id_of(const Permutation& p) const {
  auto e = find(p);
  if (!e) throw ElementNotInGroup("permutation " + p.to_cycle_string() + " is not in the group");
  return *e;
}

ElementId Group::mul(ElementId a, ElementId b) const {
  std::array<Point, kMaxBase> key{};
  const Point* ra = d_->row(a);
  const Point* rb = d_->row(b);
  for (std::size_t i = 0; i < d_->base.size(); ++i) key[i] = rb[ra[d_->base[i]]];
  return d_->lookup_key(key.data());
}

ElementId Group::inv(ElementId a) const { return d_->inverse[a]; }

ElementId Group::conj(ElementId x, ElementId g) const {
  std::array<Point, kMaxBase> key{};
  const Point* rx = d_->row(x);
  const Point* rg = d_->row(g);
  const Point* rgi = d_->row(d_->inverse[g]);
  for (std::size_t i = 0; i < d_->base.size(); ++i) key[i] = rg[rx[rgi[d_->base[i]]]];
  return d_->lookup_key(key.data());
}

bool Group::commute(ElementId a, ElementId b) const {
  const Point* ra = d_->row(a);
  const Point* rb = d_->row(b);
  for (Point p : d_->base)
    if (rb[ra[p]] != ra[rb[p]]) return false;
  return true;
}

ElementId Group::pow(ElementId a, std::uint64_t k) const {
  k %= d_->orders[a];
  ElementId result = identity();
  ElementId sq = a;
  while (k) {
    if (k & 1) result = mul(result, sq);
    sq = mul(sq, sq);
    k >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(ElementId a) const { return d_->orders[a]; }

const ClassPartition& Group::classes() const {
  std::call_once(d_->classes_once, [this] {
    const std::size_t n = d_->order;
    ClassPartition cp;
    cp.class_of.assign(n, ~std::uint32_t{0});
    std::vector<ConjugacyClass> found;
    std::vector<ElementId> queue;
    for (ElementId start = 0; start < n; ++start) {
      if (cp.class_of[start] != ~std::uint32_t{0}) continue;
      auto idx = static_cast<std::uint32_t>(found.size());
      queue.assign(1, start);
      cp.class_of[start] = idx;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (ElementId g : d_->gen_ids) {
          ElementId y = conj(queue[q], g);
          if (cp.class_of[y] == ~std::uint32_t{0}) {
            cp.class_of[y] = idx;
            queue.push_back(y);
          }
        }
      std::sort(queue.begin(), queue.end());
      found.push_back({start, queue});
    }
    std::vector<std::uint32_t> order(found.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
      return found[a].representative < found[b].representative;
    });
    std::vector<std::uint32_t> rank(found.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      cp.classes.push_back(std::move(found[order[i]]));
    }
    for (auto& c : cp.class_of) c = rank[c];
    d_->classes = std::move(cp);
  });
  return d_->classes;
}

bool Group::is_abelian() const {
  const auto& g = d_->gen_ids;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!commute(g[i], g[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(Group parent, std::vector<ElementId> sorted, std::vector<ElementId> gens)
    : parent_(std::move(parent)), elements_(std::move(sorted)), generators_(std::move(gens)) {
  member_.assign(parent_.order(), false);
  for (auto e : elements_) member_[e] = true;
}

Subgroup Subgroup::trivial(const Group& parent) { return Subgroup(parent, {Group::identity()}, {}); }

Subgroup Subgroup::whole(const Group& parent) {
  std::vector<ElementId> all(parent.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  std::vector<ElementId> gens;
  for (auto g : parent.generator_ids())
    if (g != Group::identity()) gens.push_back(g);
  return Subgroup(parent, std::move(all), std::move(gens));
}

Subgroup Subgroup::from_elements(const Group& parent, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto e : members)
    if (e >= parent.order()) throw ElementNotInGroup("element id out of range");
  Subgroup h = extend_subgroup(trivial(parent), members);
  if (h.elements_ != members)
    throw NotASubgroup("element set of size " + std::to_string(members.size()) +
                       " is not closed under multiplication");
  return h;
}

Subgroup extend_subgroup(const Subgroup& start, std::span<const ElementId> seed) {
  const Group& g = start.parent_;
  std::vector<ElementId> elems = start.elements_;
  std::vector<bool> member = start.member_;
  std::vector<ElementId> gens = start.generators_;

  for (ElementId s : seed) {
    if (member[s]) continue;
    gens.push_back(s);
    // Old elements are closed under the old generators; they only need the new one.
    const std::size_t old_size = elems.size();
    std::size_t q = elems.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      ElementId y = g.mul(elems[i], s);
      if (!member[y]) {
        member[y] = true;
        elems.push_back(y);
      }
    }
    for (; q < elems.size(); ++q)
      for (ElementId t : gens) {
        ElementId y = g.mul(elems[q], t);
        if (!member[y]) {
          member[y] = true;
          elems.push_back(y);
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  Subgroup out;
  out.parent_ = g;
  out.elements_ = std::move(elems);
  out.member_ = std::move(member);
  out.generators_ = std::move(gens);
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](ElementId e) { return other.contains(e); });
}

Group Subgroup::to_group() const {
  auto d = std::make_shared<Group::Data>();
  const std::size_t deg = parent_.degree();
  d->degree = deg;
  d->order = elements_.size();
  d->rows.reserve(elements_.size() * deg);
  for (auto e : elements_) {
    auto r = parent_.images(e);
    d->rows.insert(d->rows.end(), r.begin(), r.end());
  }
  for (auto e : generators_) d->gens.push_back(parent_.element(e));
  return Group::finish(std::move(d));
}

}  // namespace conjlab
