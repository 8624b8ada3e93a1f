#pragma once

// Verification harness for the direct-product decomposition theorem:
// hypothesis detection on N(G), exhaustive decomposition search over normal
// subgroup pairs, and a suite of property checks from the supporting lemmas.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conjlab/arith.hpp"
#include "conjlab/invariants.hpp"
#include "conjlab/structure.hpp"

namespace conjlab {

enum class Verdict { HypothesisNotMet, VerifiedDecomposition, Counterexample };

std::string_view to_string(Verdict v);
/// Throws ParseError.
Verdict verdict_from_string(std::string_view s);

struct FactorDescriptor {
  std::uint64_t order = 0;
  arith::IntSet class_sizes;
  std::vector<std::string> generators;  // cycle notation over the group's points

  friend bool operator==(const FactorDescriptor&, const FactorDescriptor&) = default;
};

struct Decomposition {
  arith::Factorization factorization;
  FactorDescriptor a;  // N(A) = omega
  FactorDescriptor b;  // N(B) = {1, n}
  bool n_is_prime_power = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class LemmaStatus { Pass, Fail, Skipped };

std::string_view to_string(LemmaStatus s);
LemmaStatus lemma_status_from_string(std::string_view s);

struct LemmaResult {
  LemmaStatus status = LemmaStatus::Pass;
  std::uint64_t checked = 0;  // cases examined; 0 with Pass means vacuous
  bool exhaustive = true;     // false when cases were sampled
  std::string detail;

  friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

struct TheoremReport {
  std::string group_name;
  std::uint64_t group_order = 0;
  ClassSizeSet n_of_g;
  std::vector<arith::Factorization> factorizations;
  std::vector<Decomposition> decompositions;
  Verdict verdict = Verdict::HypothesisNotMet;
  std::map<std::string, LemmaResult> lemma_results;
  std::map<std::string, std::int64_t> timings;  // phase -> milliseconds

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

struct VerifyOptions {
  std::string name;
  std::size_t normal_budget = kDefaultNormalBudget;
  bool all_decompositions = false;
  bool run_lemmas = true;
  std::uint64_t seed = 0;
  std::size_t sample_budget = 10'000;
  bool record_timings = true;
};

/// Throws BudgetExceeded when the normal-subgroup search cannot complete;
/// no verdict is produced in that case.
TheoremReport verify_main_theorem(const Group& g, const VerifyOptions& opts = {});

/// Deterministic for identical (group, seed, budgets).
std::map<std::string, LemmaResult> run_lemma_suite(const Group& g, std::uint64_t seed,
                                                   std::size_t sample_budget,
                                                   std::size_t normal_budget = kDefaultNormalBudget);

/// Normal p-complement check for R(p)* groups. Throws Inapplicable otherwise.
bool check_star(const Group& g, std::uint64_t p);
/// Z(P) <= Z(G) over every Sylow p-subgroup, for R(p)* groups. Throws Inapplicable otherwise.
bool check_starcor(const Group& g, std::uint64_t p);
/// Every non-central element misses some conjugacy class entirely.
bool check_hz2_exhaustive(const Group& g);

/// An abelian group with a group of automorphisms given as permutations of
/// its element ids.
struct CoprimeActionWitness {
  std::string name;
  Group base;
  std::vector<Permutation> actors;
};

struct Gore5Outcome {
  Subgroup fixed;       // C_G(A)
  Subgroup commutator;  // [G, A]
  std::uint64_t acting_order = 1;
  bool pass = false;    // base = fixed x commutator
};

/// Throws NotAbelian, NotCoprime, or DomainError if an actor is not an automorphism.
Gore5Outcome check_gore5(const CoprimeActionWitness& w);

}  // namespace conjlab
