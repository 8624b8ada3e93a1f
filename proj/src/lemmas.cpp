#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "conjlab/error.hpp"
#include "conjlab/theorem.hpp"

namespace conjlab {

namespace {

// Quotients past this index are not built; those kernels are left out of the
// quotient claims and reported in the detail string.
constexpr std::uint64_t kQuotientIndexLimit = 5'000;
// Above this order, coprime commuting pairs are drawn rather than listed.
constexpr std::uint64_t kPairListLimit = 2'000;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool exhaustive = true;

  void record(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }

  LemmaResult result(std::string detail = {}) const {
    LemmaResult r;
    r.status = failures ? LemmaStatus::Fail : LemmaStatus::Pass;
    r.checked = checked;
    r.exhaustive = exhaustive;
    if (failures) detail = std::to_string(failures) + " violation(s); first: " + first_failure;
    r.detail = std::move(detail);
    return r;
  }
};

LemmaResult skipped(const std::string& why) {
  LemmaResult r;
  r.status = LemmaStatus::Skipped;
  r.exhaustive = false;
  r.detail = why;
  return r;
}

/// Runs `check(i)` over 0..total-1, or over `budget` seeded draws when total exceeds it.
void over_cases(std::uint64_t total, std::size_t budget, std::mt19937_64& rng, Tally& tally,
                const std::function<void(std::uint64_t)>& check) {
  if (total <= budget) {
    for (std::uint64_t i = 0; i < total; ++i) check(i);
    return;
  }
  tally.exhaustive = false;
  for (std::size_t i = 0; i < budget; ++i) check(draw(rng, total));
}

class Suite {
 public:
  Suite(const Group& g, std::uint64_t seed, std::size_t budget, std::size_t normal_budget)
      : g_(g), seed_(seed), budget_(budget), normal_budget_(normal_budget) {
    if (g.order() > 1) primes_ = arith::prime_divisors(g.order());
  }

  std::map<std::string, LemmaResult> run() {
    std::map<std::string, LemmaResult> out;
    out["star"] = star();
    out["starcor"] = starcor();
    out["factorKh"] = factor_kh();
    out["hz2"] = hz2();
    out["vse"] = vse();
    out["aberp"] = aberp();
    out["rpssfak"] = rpssfak();
    out["gooddirect"] = gooddirect();
    return out;
  }

 private:
  std::mt19937_64 rng_for(std::string_view lemma) const { return std::mt19937_64(seed_ ^ fnv1a(lemma)); }

  const RpClassification& rp(std::uint64_t p) {
    auto it = rp_.find(p);
    if (it == rp_.end()) it = rp_.emplace(p, classify_rp(g_, p)).first;
    return it->second;
  }

  const std::vector<Subgroup>* normals() {
    if (!normals_tried_) {
      normals_tried_ = true;
      try {
        normals_ = normal_subgroups(g_, normal_budget_);
      } catch (const BudgetExceeded&) {
        normals_.reset();
      }
    }
    return normals_ ? &*normals_ : nullptr;
  }

  std::vector<bool> centralizer_mask(ElementId x) const {
    std::vector<bool> m(g_.order());
    for (ElementId y = 0; y < g_.order(); ++y) m[y] = g_.commute(x, y);
    return m;
  }

  std::uint64_t class_size(ElementId x) const {
    const auto& cp = g_.classes();
    return cp.classes[cp.class_of[x]].size();
  }

  LemmaResult star() {
    Tally t;
    for (auto p : primes_)
      if (rp(p).status == RpStatus::RpStar)
        t.record(has_normal_p_complement(g_, p), [p] { return "no normal " + std::to_string(p) + "-complement"; });
    return t.result();
  }

  LemmaResult starcor() {
    Tally t;
    const Subgroup z = center(g_);
    for (auto p : primes_) {
      if (rp(p).status != RpStatus::RpStar) continue;
      for (const Subgroup& s : conjugates(sylow_subgroup(g_, p))) {
        const Group sg = s.to_group();
        const auto zs = center(sg).elements();
        bool ok = std::all_of(zs.begin(), zs.end(), [&](ElementId e) { return z.contains(s.elements()[e]); });
        t.record(ok, [p] { return "Z(P) not central for p=" + std::to_string(p); });
      }
    }
    return t.result();
  }

  const Quotient* quotient(std::size_t k) {
    auto it = quotients_.find(k);
    if (it != quotients_.end()) return it->second ? &*it->second : nullptr;
    const Subgroup& kernel = (*normals_)[k];
    std::optional<Quotient> q;
    if (g_.order() / kernel.order() <= kQuotientIndexLimit) q = quotient_group(kernel);
    return quotients_.emplace(k, std::move(q)).first->second ? &*quotients_.at(k) : nullptr;
  }

  LemmaResult factor_kh() {
    const auto* ns = normals();
    if (!ns) return skipped("normal-subgroup budget exhausted");
    Tally t;
    auto rng = rng_for("factorKh");

    // (i), (iv), (v) over (K, x).
    std::vector<std::size_t> usable;
    std::size_t too_large = 0;
    for (std::size_t k = 0; k < ns->size(); ++k) {
      if ((*ns)[k].order() == 1 || g_.order() / (*ns)[k].order() <= kQuotientIndexLimit)
        usable.push_back(k);
      else
        ++too_large;
    }
    const std::uint64_t n = g_.order();
    over_cases(usable.size() * n, budget_, rng, t, [&](std::uint64_t i) {
      const std::size_t k = usable[i / n];
      const auto x = static_cast<ElementId>(i % n);
      check_kernel_element(k, x, t);
    });

    // (iii) over commuting pairs of coprime orders.
    auto coprime = [&](ElementId x, ElementId y) {
      return arith::gcd(g_.element_order(x), g_.element_order(y)) == 1;
    };
    auto check_pair = [&](ElementId x, ElementId y) {
      const ElementId xy = g_.mul(x, y);
      bool ok = true;
      for (ElementId z = 0; z < n && ok; ++z)
        ok = g_.commute(z, xy) == (g_.commute(z, x) && g_.commute(z, y));
      t.record(ok, [&] { return "(iii) C(xy) != C(x) n C(y) for x=" + g_.element(x).to_cycle_string() +
                                " y=" + g_.element(y).to_cycle_string(); });
    };
    if (n <= kPairListLimit) {
      std::vector<std::pair<ElementId, ElementId>> pairs;
      for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
          if (g_.commute(x, y) && coprime(x, y)) pairs.emplace_back(x, y);
      over_cases(pairs.size(), budget_, rng, t, [&](std::uint64_t i) { check_pair(pairs[i].first, pairs[i].second); });
    } else {
      t.exhaustive = false;
      for (std::size_t i = 0; i < budget_; ++i) {
        const auto x = static_cast<ElementId>(draw(rng, n));
        std::vector<ElementId> partners;
        for (ElementId y = 0; y < n; ++y)
          if (g_.commute(x, y) && coprime(x, y)) partners.push_back(y);
        check_pair(x, partners[draw(rng, partners.size())]);
      }
    }

    std::string detail;
    if (too_large)
      detail = std::to_string(too_large) + " kernel(s) with index above " + std::to_string(kQuotientIndexLimit) +
               " left out of quotient claims";
    auto r = t.result(detail);
    if (too_large) r.exhaustive = false;
    return r;
  }

  void check_kernel_element(std::size_t k, ElementId x, Tally& t) {
    const Subgroup& kernel = (*normals_)[k];
    const std::uint64_t xg = class_size(x);
    auto describe = [&](const char* claim) {
      return [&, claim] {
        return std::string(claim) + " fails for |K|=" + std::to_string(kernel.order()) +
               " x=" + g_.element(x).to_cycle_string();
      };
    };

    // (i) |x^K| divides |x^G|
    t.record(xg % index_of(kernel, x) == 0, describe("(i) |x^K| | |x^G|"));

    const std::vector<bool> cx = centralizer_mask(x);
    if (kernel.order() == 1) {
      // G/1 is G itself; the quotient claims reduce to identities.
      return;
    }
    const Quotient* q = quotient(k);
    const Group& qg = q->group;
    const ElementId xbar = q->projection[x];
    const auto& qcp = qg.classes();

    // (i) |xbar^Gbar| divides |x^G|
    t.record(xg % qcp.classes[qcp.class_of[xbar]].size() == 0, describe("(i) |xbar^Gbar| | |x^G|"));

    // (v) image of C_G(x) lies in C_Gbar(xbar)
    std::vector<bool> image(qg.order(), false);
    bool inside = true;
    for (ElementId y = 0; y < g_.order(); ++y) {
      if (!cx[y]) continue;
      const ElementId ybar = q->projection[y];
      image[ybar] = true;
      if (!qg.commute(ybar, xbar)) inside = false;
    }
    t.record(inside, describe("(v) C_G(x)K/K <= C_Gbar(xbar)"));

    // (iv) coprime case: equality
    if (arith::gcd(g_.element_order(x), kernel.order()) == 1) {
      bool equal = true;
      for (ElementId z = 0; z < qg.order() && equal; ++z) equal = image[z] == qg.commute(z, xbar);
      t.record(equal, describe("(iv) C_Gbar(xbar) = C_G(x)K/K"));
    }
  }

  LemmaResult hz2() {
    Tally t;
    auto rng = rng_for("hz2");
    const Subgroup z = center(g_);
    const auto& cp = g_.classes();
    std::vector<ElementId> noncentral;
    for (ElementId x = 0; x < g_.order(); ++x)
      if (!z.contains(x)) noncentral.push_back(x);
    std::vector<bool> hit(cp.classes.size());
    over_cases(noncentral.size(), budget_, rng, t, [&](std::uint64_t i) {
      const ElementId x = noncentral[i];
      std::fill(hit.begin(), hit.end(), false);
      for (ElementId y = 0; y < g_.order(); ++y)
        if (g_.commute(x, y)) hit[cp.class_of[y]] = true;
      t.record(!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
               [&] { return "non-central " + g_.element(x).to_cycle_string() + " meets every class"; });
    });
    return t.result();
  }

  LemmaResult vse() {
    Tally t;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      for (std::size_t j = i + 1; j < primes_.size(); ++j) {
        const auto p = primes_[i], q = primes_[j];
        const auto c = sylow_commute_criterion(g_, p, q);
        t.record(c.class_side == c.subgroup_side, [&] {
          return "p=" + std::to_string(p) + " q=" + std::to_string(q) + ": class side " +
                 (c.class_side ? "true" : "false") + ", subgroup side " + (c.subgroup_side ? "true" : "false");
        });
      }
    return t.result();
  }

  LemmaResult aberp() {
    Tally t;
    for (auto p : primes_) {
      const auto& c = rp(p);
      if (c.status != RpStatus::RpStarStar || !c.alpha) continue;
      t.record(is_abelian(sylow_subgroup(g_, p)),
               [p] { return "Sylow " + std::to_string(p) + "-subgroup is not abelian"; });
    }
    return t.result();
  }

  LemmaResult rpssfak() {
    Tally t;
    std::optional<std::vector<CompositionFactor>> factors;
    for (auto p : primes_) {
      if (rp(p).status != RpStatus::RpStarStar) continue;
      if (!factors) {
        try {
          factors = composition_factors(g_, normal_budget_);
        } catch (const BudgetExceeded&) {
          return skipped("normal-subgroup budget exhausted in composition series");
        }
      }
      const auto bad = std::count_if(factors->begin(), factors->end(), [p](const CompositionFactor& f) {
        return !f.is_abelian && f.order % p == 0;
      });
      t.record(bad <= 1, [p, bad] {
        return std::to_string(bad) + " non-abelian factors of order divisible by " + std::to_string(p);
      });
    }
    return t.result();
  }

  LemmaResult gooddirect() {
    Tally t;
    auto rng = rng_for("gooddirect");
    std::vector<std::pair<const Subgroup*, const Subgroup*>> witnesses;
    for (auto p : primes_) {
      const Subgroup sylow = sylow_subgroup(g_, p);
      if (!is_normal(sylow)) continue;
      const auto* ns = normals();
      if (!ns) return skipped("normal-subgroup budget exhausted");
      std::vector<const Subgroup*> inside;
      for (const auto& n : *ns)
        if (n.order() > 1 && n.order() < sylow.order() && n.is_subgroup_of(sylow)) inside.push_back(&n);
      for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
          const Subgroup& a = *inside[i];
          const Subgroup& b = *inside[j];
          if (a.order() * b.order() != sylow.order()) continue;
          if (intersection(a, b).order() != 1) continue;
          witnesses.emplace_back(&a, &b);
        }
    }
    std::vector<std::uint64_t> offsets{0};
    for (const auto& [a, b] : witnesses) offsets.push_back(offsets.back() + a->order() * b->order());
    over_cases(offsets.back(), budget_, rng, t, [&](std::uint64_t i) {
      const auto w = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), i) - offsets.begin() - 1);
      const auto [a, b] = witnesses[w];
      const std::uint64_t local = i - offsets[w];
      const ElementId x = a->elements()[local / b->order()];
      const ElementId y = b->elements()[local % b->order()];
      const ElementId xy = g_.mul(x, y);
      bool ok = true;
      for (ElementId z = 0; z < g_.order() && ok; ++z)
        ok = g_.commute(z, xy) == (g_.commute(z, x) && g_.commute(z, y));
      t.record(ok, [&] { return "C(ab) != C(a) n C(b) for a=" + g_.element(x).to_cycle_string() +
                                " b=" + g_.element(y).to_cycle_string(); });
    });
    return t.result(witnesses.empty() ? "no normal Sylow subgroup splits into normal factors" : "");
  }

  const Group& g_;
  std::uint64_t seed_;
  std::size_t budget_;
  std::size_t normal_budget_;
  std::vector<std::uint64_t> primes_;
  std::map<std::uint64_t, RpClassification> rp_;
  bool normals_tried_ = false;
  std::optional<std::vector<Subgroup>> normals_;
  std::map<std::size_t, std::optional<Quotient>> quotients_;
};

}  // namespace

std::map<std::string, LemmaResult> run_lemma_suite(const Group& g, std::uint64_t seed, std::size_t sample_budget,
                                                   std::size_t normal_budget) {
  if (sample_budget == 0) throw DomainError("lemma sample budget must be positive");
  return Suite(g, seed, sample_budget, normal_budget).run();
}

}  // namespace conjlab
