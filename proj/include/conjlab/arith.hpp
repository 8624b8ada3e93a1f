#pragma once

// Integer-set combinatorics over class-size sets: prime parts, divisibility
// extremes, separatedness, set products and the divisibility digraph.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace conjlab::arith {

/// Finite set of positive integers, kept sorted.
using IntSet = std::set<std::uint64_t>;

bool is_prime(std::uint64_t k);

/// pi(k): the primes dividing k, ascending. Throws DomainError for k = 0.
std::vector<std::uint64_t> prime_divisors(std::uint64_t k);

/// Highest power of the prime p dividing k.
std::uint64_t p_part(std::uint64_t k, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Maximal elements under divisibility (divide no other element).
IntSet max_elements(const IntSet& s);
/// Minimal elements under divisibility (divisible by no other element).
IntSet min_elements(const IntSet& s);

/// True iff every element fails to divide at least one maximal element.
/// Any set containing 1 is not separated; theorem-level callers pass the set minus 1.
bool is_separated(const IntSet& s);

struct SetProduct {
  IntSet values;
  bool collision_free = true;  // |values| == |a| * |b|
};

SetProduct set_product(const IntSet& a, const IntSet& b);

struct DivisibilityDigraph {
  IntSet vertices;
  /// (a, b) with a != b and a | b, ascending lexicographic.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

DivisibilityDigraph divisibility_digraph(const IntSet& s);

struct Components {
  /// Each component ascending; components ordered by their least vertex.
  std::vector<IntSet> parts;
  bool is_disconnected() const { return parts.size() >= 2; }
};

/// Weakly connected components (edge direction ignored).
Components weak_components(const DivisibilityDigraph& g);

/// Graphviz rendering; nodes ascending, one edge per divisibility pair.
std::string to_dot(const DivisibilityDigraph& g, const std::string& graph_name = "Gamma");

/// A split N = omega x {1, n} meeting the coprimality and disconnectedness hypotheses.
struct Factorization {
  IntSet omega;
  std::uint64_t n = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every (omega, n) with n > 1, 1 in omega, omega x {1,n} = class_sizes,
/// gcd(n, a) = 1 for a in omega \ {1}, and Gamma(omega \ {1}) disconnected.
/// Ascending by n. Throws DomainError if 1 is missing.
std::vector<Factorization> find_hypothesis_factorizations(const IntSet& class_sizes);

/// Parses "12,15,20" (whitespace tolerated). Throws ParseError.
IntSet parse_int_set(const std::string& csv);

std::string format_int_set(const IntSet& s);

}  // namespace conjlab::arith
