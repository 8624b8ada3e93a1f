#include "conjlab/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conjlab/error.hpp"

namespace conjlab::arith {

namespace {

void require_positive(const IntSet& s, const char* op) {
  if (s.empty()) throw DomainError(std::string(op) + ": empty set");
  if (*s.begin() == 0) throw DomainError(std::string(op) + ": set contains 0");
}

}  // namespace

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t k) {
  if (k == 0) throw DomainError("prime_divisors: k must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d != 0) continue;
    primes.push_back(d);
    while (k % d == 0) k /= d;
  }
  if (k > 1) primes.push_back(k);
  return primes;
}

std::uint64_t p_part(std::uint64_t k, std::uint64_t p) {
  if (k == 0) throw DomainError("p_part: k must be positive");
  if (!is_prime(p)) throw DomainError("p_part: " + std::to_string(p) + " is not prime");
  std::uint64_t part = 1;
  while (k % p == 0) {
    k /= p;
    part *= p;
  }
  return part;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

IntSet max_elements(const IntSet& s) {
  require_positive(s, "max_elements");
  IntSet out;
  for (auto a : s) {
    bool maximal = std::none_of(s.begin(), s.end(), [a](auto b) { return b != a && b % a == 0; });
    if (maximal) out.insert(a);
  }
  return out;
}

IntSet min_elements(const IntSet& s) {
  require_positive(s, "min_elements");
  IntSet out;
  for (auto a : s) {
    bool minimal = std::none_of(s.begin(), s.end(), [a](auto b) { return b != a && a % b == 0; });
    if (minimal) out.insert(a);
  }
  return out;
}

bool is_separated(const IntSet& s) {
  const IntSet mu = max_elements(s);
  return std::all_of(s.begin(), s.end(), [&mu](auto a) {
    return std::any_of(mu.begin(), mu.end(), [a](auto b) { return b % a != 0; });
  });
}

SetProduct set_product(const IntSet& a, const IntSet& b) {
  require_positive(a, "set_product");
  require_positive(b, "set_product");
  SetProduct out;
  for (auto x : a)
    for (auto y : b) out.values.insert(x * y);
  out.collision_free = out.values.size() == a.size() * b.size();
  return out;
}

DivisibilityDigraph divisibility_digraph(const IntSet& s) {
  require_positive(s, "divisibility_digraph");
  DivisibilityDigraph g;
  g.vertices = s;
  for (auto a : s)
    for (auto b : s)
      if (a != b && b % a == 0) g.edges.emplace_back(a, b);
  return g;
}

Components weak_components(const DivisibilityDigraph& g) {
  const std::vector<std::uint64_t> verts(g.vertices.begin(), g.vertices.end());
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&verts](std::uint64_t v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const auto& [a, b] : g.edges) {
    auto ra = find(index(a));
    auto rb = find(index(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  Components out;
  std::vector<std::size_t> slot(verts.size(), verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto r = find(i);
    if (slot[r] == verts.size()) {
      slot[r] = out.parts.size();
      out.parts.emplace_back();
    }
    out.parts[slot[r]].insert(verts[i]);
  }
  return out;
}

std::string to_dot(const DivisibilityDigraph& g, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (auto v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& [a, b] : g.edges) os << "  \"" << a << "\" -> \"" << b << "\";\n";
  os << "}\n";
  return os.str();
}

std::vector<Factorization> find_hypothesis_factorizations(const IntSet& class_sizes) {
  if (!class_sizes.contains(1))
    throw DomainError("find_hypothesis_factorizations: set does not contain 1");
  require_positive(class_sizes, "find_hypothesis_factorizations");

  // Since 1 is in omega, n = n*1 is in the set, so n ranges over the set itself.
  // Coprimality then forces omega: an element sharing a factor with n cannot lie
  // in omega, and it lies in n*omega only if n divides it with a coprime cofactor.
  std::vector<Factorization> out;
  for (auto n : class_sizes) {
    if (n == 1) continue;
    IntSet omega;
    for (auto s : class_sizes)
      if (gcd(s, n) == 1) omega.insert(s);
    if (set_product(omega, {1, n}).values != class_sizes) continue;

    IntSet rest = omega;
    rest.erase(1);
    if (rest.empty()) continue;
    if (!weak_components(divisibility_digraph(rest)).is_disconnected()) continue;
    out.push_back({std::move(omega), n});
  }
  return out;
}

IntSet parse_int_set(const std::string& csv) {
  IntSet out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in integer list '" + csv + "'");
    tok = tok.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("not a positive integer: '" + tok + "'");
    std::uint64_t v = 0;
    try {
      v = std::stoull(tok);
    } catch (const std::exception&) {
      throw ParseError("integer out of range: '" + tok + "'");
    }
    if (v == 0) throw ParseError("not a positive integer: '" + tok + "'");
    out.insert(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string format_int_set(const IntSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace conjlab::arith
