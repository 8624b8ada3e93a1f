#include "conjlab/corpus.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "conjlab/error.hpp"
#include "conjlab/grp_format.hpp"
#include "conjlab/invariants.hpp"
#include "conjlab/report_json.hpp"

namespace conjlab {

namespace {

using Kind = GroupSpec::Kind;

struct KindName {
  Kind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindName kKinds[] = {
    {Kind::Cyclic, "cyclic", 1},         {Kind::Dihedral, "dihedral", 1},     {Kind::Symmetric, "symmetric", 1},
    {Kind::Alternating, "alternating", 1}, {Kind::Heisenberg, "heisenberg", 1}, {Kind::Frobenius, "frobenius", 2},
    {Kind::Direct, "direct", 0},         {Kind::File, "file", 0},
};

const KindName& info(Kind k) {
  for (const auto& kn : kKinds)
    if (kn.kind == k) return kn;
  throw InvalidSpec("unknown group kind");
}

std::uint64_t parse_param(std::string_view tok, std::string_view whole) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 18)
    throw InvalidSpec("bad parameter '" + std::string(tok) + "' in spec '" + std::string(whole) + "'");
  return std::stoull(std::string(tok));
}

std::vector<Point> rotation(std::uint64_t n, std::uint64_t step) {
  std::vector<Point> img(n);
  for (std::uint64_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + step) % n);
  return img;
}

Group build_heisenberg(std::uint64_t p, std::size_t cap) {
  // Right-regular action on (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  const std::uint64_t n = p * p * p;
  auto index = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<Point>(((a % p) * p + (b % p)) * p + (c % p));
  };
  std::vector<Point> x(n), y(n);
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c) {
        x[index(a, b, c)] = index(a + 1, b, c);
        y[index(a, b, c)] = index(a, b + 1, c + a);
      }
  return Group::from_generators(n, {Permutation(std::move(x)), Permutation(std::move(y))}, cap);
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) { return {Kind::Cyclic, {n}, {}, {}}; }
GroupSpec GroupSpec::dihedral(std::uint64_t n) { return {Kind::Dihedral, {n}, {}, {}}; }
GroupSpec GroupSpec::symmetric(std::uint64_t n) { return {Kind::Symmetric, {n}, {}, {}}; }
GroupSpec GroupSpec::alternating(std::uint64_t n) { return {Kind::Alternating, {n}, {}, {}}; }
GroupSpec GroupSpec::heisenberg(std::uint64_t p) { return {Kind::Heisenberg, {p}, {}, {}}; }
GroupSpec GroupSpec::frobenius(std::uint64_t p, std::uint64_t q) { return {Kind::Frobenius, {p, q}, {}, {}}; }
GroupSpec GroupSpec::direct(std::vector<GroupSpec> factors) { return {Kind::Direct, {}, std::move(factors), {}}; }
GroupSpec GroupSpec::file(std::string path) { return {Kind::File, {}, {}, std::move(path)}; }

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidSpec("spec '" + std::string(text) + "' lacks 'kind:'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);

  for (const auto& kn : kKinds) {
    if (kn.name != kind) continue;
    GroupSpec spec;
    spec.kind = kn.kind;
    if (kn.kind == Kind::File) {
      if (rest.empty()) throw InvalidSpec("file spec needs a path");
      spec.path = std::string(rest);
    } else if (kn.kind == Kind::Direct) {
      std::size_t start = 0;
      for (;;) {
        const auto plus = rest.find('+', start);
        spec.factors.push_back(parse(rest.substr(start, plus == std::string_view::npos ? plus : plus - start)));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
      }
    } else {
      std::size_t start = 0;
      for (;;) {
        const auto comma = rest.find(',', start);
        spec.params.push_back(parse_param(rest.substr(start, comma == std::string_view::npos ? comma : comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (spec.params.size() != kn.arity)
        throw InvalidSpec("spec '" + std::string(text) + "' expects " + std::to_string(kn.arity) + " parameter(s)");
    }
    spec.validate();
    return spec;
  }
  throw InvalidSpec("unknown group kind '" + std::string(kind) + "'");
}

std::string GroupSpec::name() const {
  std::string out(info(kind).name);
  out += ':';
  if (kind == Kind::File) return out + path;
  if (kind == Kind::Direct) {
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "+" : "") + factors[i].name();
    return out;
  }
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

void GroupSpec::validate() const {
  auto fail = [this](const std::string& why) { throw InvalidSpec(name() + ": " + why); };
  if (kind != Kind::Direct && kind != Kind::File && params.size() != info(kind).arity)
    fail("wrong parameter count");
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Symmetric:
    case Kind::Alternating:
      if (params[0] < 1) fail("parameter must be positive");
      break;
    case Kind::Dihedral:
      if (params[0] < 3) fail("dihedral needs n >= 3");
      break;
    case Kind::Heisenberg:
      if (params[0] == 2 || !arith::is_prime(params[0])) fail("heisenberg needs an odd prime");
      break;
    case Kind::Frobenius: {
      const auto p = params[0], q = params[1];
      if (!arith::is_prime(p)) fail("frobenius needs p prime");
      if (q < 2 || (p - 1) % q != 0) fail("frobenius needs q > 1 dividing p-1");
      break;
    }
    case Kind::Direct:
      if (factors.empty()) fail("direct needs at least one factor");
      for (const auto& f : factors) f.validate();
      break;
    case Kind::File:
      if (path.empty()) fail("empty path");
      break;
  }
}

std::uint64_t frobenius_multiplier(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t m = 2; m < p; ++m) {
    std::uint64_t x = 1, ord = 0;
    do {
      x = x * m % p;
      ++ord;
    } while (x != 1);
    if (ord == q) return m;
  }
  throw InvalidSpec("no multiplier of order " + std::to_string(q) + " modulo " + std::to_string(p));
}

Group build(const GroupSpec& spec, std::size_t cap) {
  spec.validate();
  switch (spec.kind) {
    case Kind::Cyclic: {
      const auto n = spec.params[0];
      if (n == 1) return Group::from_generators(1, {}, cap);
      return Group::from_generators(n, {Permutation(rotation(n, 1))}, cap);
    }
    case Kind::Dihedral: {
      const auto n = spec.params[0];
      std::vector<Point> reflect(n);
      for (std::uint64_t i = 0; i < n; ++i) reflect[i] = static_cast<Point>((n - i) % n);
      return Group::from_generators(n, {Permutation(rotation(n, 1)), Permutation(std::move(reflect))}, cap);
    }
    case Kind::Symmetric: {
      const auto n = spec.params[0];
      if (n == 1) return Group::from_generators(1, {}, cap);
      return Group::from_generators(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation(rotation(n, 1))}, cap);
    }
    case Kind::Alternating: {
      const auto n = spec.params[0];
      std::vector<Permutation> gens;
      for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
      return Group::from_generators(n, std::move(gens), cap);
    }
    case Kind::Heisenberg:
      return build_heisenberg(spec.params[0], cap);
    case Kind::Frobenius: {
      const auto p = spec.params[0];
      const auto m = frobenius_multiplier(p, spec.params[1]);
      std::vector<Point> scale(p);
      for (std::uint64_t i = 0; i < p; ++i) scale[i] = static_cast<Point>(i * m % p);
      return Group::from_generators(p, {Permutation(rotation(p, 1)), Permutation(std::move(scale))}, cap);
    }
    case Kind::Direct: {
      Group out = build(spec.factors.front(), cap);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) out = direct_product(out, build(spec.factors[i], cap), cap);
      return out;
    }
    case Kind::File: {
      GrpFile f = read_grp_file(spec.path);
      return Group::from_generators(f.degree, std::move(f.generators), cap);
    }
  }
  throw InvalidSpec("unhandled group kind");
}

std::vector<GroupSpec> product_sweep_factors() {
  return {GroupSpec::cyclic(2),      GroupSpec::dihedral(5),    GroupSpec::symmetric(3),
          GroupSpec::symmetric(4),   GroupSpec::alternating(4), GroupSpec::alternating(5),
          GroupSpec::heisenberg(3),  GroupSpec::heisenberg(7),  GroupSpec::frobenius(5, 4)};
}

std::vector<GroupSpec> builtin_corpus() {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= 40; ++n) out.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; 2 * n <= 40; ++n) out.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t n : {3, 4, 5}) out.push_back(GroupSpec::symmetric(n));
  for (std::uint64_t n : {4, 5}) out.push_back(GroupSpec::alternating(n));
  for (std::uint64_t p : {3, 7}) out.push_back(GroupSpec::heisenberg(p));
  out.push_back(GroupSpec::frobenius(5, 4));
  out.push_back(GroupSpec::frobenius(7, 3));
  out.push_back(GroupSpec::frobenius(7, 6));
  out.push_back(GroupSpec::frobenius(13, 3));

  // Products with an extraspecial factor of exponent p need gcd(p, a) = 1 for
  // every nontrivial class size a of the other factor. Cyclic factors use the
  // least prime coprime to the other factor's order.
  for (const auto& a : {GroupSpec::frobenius(5, 4), GroupSpec::frobenius(7, 3), GroupSpec::alternating(5)}) {
    const Group ga = build(a);
    const auto sizes = class_size_set(ga).sizes;
    for (std::uint64_t p : {3, 7}) {
      bool coprime = std::all_of(sizes.begin(), sizes.end(), [p](auto s) { return s == 1 || arith::gcd(s, p) == 1; });
      if (coprime) out.push_back(GroupSpec::direct({a, GroupSpec::heisenberg(p)}));
    }
    std::uint64_t q = 2;
    while (ga.order() % q == 0 || !arith::is_prime(q)) ++q;
    out.push_back(GroupSpec::direct({a, GroupSpec::cyclic(q)}));
  }
  return out;
}

namespace {

/// Base C_m^k with automorphisms given as k x k integer matrices acting on exponent vectors.
CoprimeActionWitness matrix_witness(std::string name, std::uint64_t m, std::size_t k,
                                    const std::vector<std::vector<std::vector<std::int64_t>>>& matrices) {
  std::vector<GroupSpec> factors(k, GroupSpec::cyclic(m));
  Group base = k == 1 ? build(factors[0]) : build(GroupSpec::direct(factors));

  // Exponent vector (as a mixed-radix number) -> element id.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= m;
  std::vector<ElementId> id_of(total);
  const auto& gens = base.generator_ids();
  for (std::uint64_t code = 0; code < total; ++code) {
    ElementId e = Group::identity();
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      e = base.mul(e, base.pow(gens[i], rest % m));
      rest /= m;
    }
    id_of[code] = e;
  }

  CoprimeActionWitness w{std::move(name), base, {}};
  for (const auto& mat : matrices) {
    std::vector<Point> img(base.order());
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> v(k);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < k; ++i) {
        v[i] = static_cast<std::int64_t>(rest % m);
        rest /= m;
      }
      std::uint64_t out = 0;
      for (std::size_t i = k; i-- > 0;) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < k; ++j) s += mat[i][j] * v[j];
        const auto mm = static_cast<std::int64_t>(m);
        out = out * m + static_cast<std::uint64_t>(((s % mm) + mm) % mm);
      }
      img[id_of[code]] = id_of[out];
    }
    w.actors.emplace_back(std::move(img));
  }
  return w;
}

CoprimeActionWitness scalar_witness(std::uint64_t m, std::vector<std::int64_t> multipliers) {
  std::string name = "C" + std::to_string(m) + " by";
  std::vector<std::vector<std::vector<std::int64_t>>> mats;
  for (auto u : multipliers) {
    name += " x" + std::to_string(u);
    mats.push_back({{u}});
  }
  if (multipliers.empty()) name += " nothing";
  return matrix_witness(std::move(name), m, 1, mats);
}

}  // namespace

std::vector<CoprimeActionWitness> gore5_witnesses() {
  std::vector<CoprimeActionWitness> out;
  out.push_back(matrix_witness("C2xC2 by C3 cycling involutions", 2, 2, {{{0, 1}, {1, 1}}}));
  out.push_back(matrix_witness("C2xC2 trivial", 2, 2, {}));
  out.push_back(matrix_witness("C2^3 by Singer cycle", 2, 3, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}));
  out.push_back(matrix_witness("C2^3 by coordinate 3-cycle", 2, 3, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}));
  out.push_back(matrix_witness("C3xC3 by diag(-1,1)", 3, 2, {{{-1, 0}, {0, 1}}}));
  out.push_back(matrix_witness("C3xC3 by swap", 3, 2, {{{0, 1}, {1, 0}}}));
  out.push_back(matrix_witness("C3^3 by swap of two coordinates", 3, 3, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  out.push_back(matrix_witness("C5xC5 by diag(2,1)", 5, 2, {{{2, 0}, {0, 1}}}));
  out.push_back(matrix_witness("C5xC5 by rotation", 5, 2, {{{0, -1}, {1, 0}}}));
  out.push_back(matrix_witness("C5xC5 by inversion", 5, 2, {{{-1, 0}, {0, -1}}}));
  out.push_back(scalar_witness(15, {-1}));
  out.push_back(scalar_witness(15, {4}));
  out.push_back(scalar_witness(15, {2}));
  out.push_back(scalar_witness(21, {8}));
  out.push_back(scalar_witness(35, {-1}));
  out.push_back(scalar_witness(9, {-1}));
  out.push_back(scalar_witness(9, {}));
  out.push_back(scalar_witness(7, {2}));
  out.push_back(scalar_witness(7, {3}));
  out.push_back(scalar_witness(7, {2, -1}));
  out.push_back(scalar_witness(11, {2}));
  out.push_back(scalar_witness(13, {3}));
  out.push_back(scalar_witness(13, {5}));
  return out;
}

std::string to_jsonl_line(const ScanRecord& r) {
  Json j;
  j["spec"] = r.spec.name();
  j["report"] = r.report ? to_json(*r.report) : Json(nullptr);
  j["error"] = r.error;
  j["engine_version"] = r.engine_version;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

ScanRecord record_from_jsonl_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    ScanRecord r;
    r.spec = GroupSpec::parse(j.at("spec").get<std::string>());
    if (!j.at("report").is_null()) r.report = report_from_json(j.at("report"));
    r.error = j.at("error").get<std::string>();
    r.engine_version = j.at("engine_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("record schema: ") + e.what());
  } catch (const InvalidSpec& e) {
    throw ParseError(std::string("record spec: ") + e.what());
  }
}

void write_records(const std::filesystem::path& path, const std::vector<ScanRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : records) {
    out << to_jsonl_line(r) + "\n";
    out.flush();
  }
  if (!out) throw IoError("write failed for " + path.string());
}

void append_record(const std::filesystem::path& path, const ScanRecord& record) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot append to " + path.string());
  out << to_jsonl_line(record) + "\n";
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<ScanRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<ScanRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_jsonl_line(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), line_no);
    }
  }
  return out;
}

std::string current_timestamp() { return utc_now(); }

}  // namespace conjlab
