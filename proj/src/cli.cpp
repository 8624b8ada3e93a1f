#include "conjlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "conjlab/error.hpp"
#include "conjlab/report_json.hpp"

namespace conjlab::cli {

namespace {

Json int_array(const arith::IntSet& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

std::size_t env_cap() {
  const char* raw = std::getenv("CONJLAB_CAP");
  if (!raw || !*raw) return kDefaultElementCap;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 12)
    throw InvalidSpec("CONJLAB_CAP must be a positive integer, got '" + text + "'");
  const auto v = std::stoull(text);
  if (v == 0) throw InvalidSpec("CONJLAB_CAP must be positive");
  return v;
}

ScanRecord verify_one(const GroupSpec& spec, const ScanOptions& opts) {
  ScanRecord rec;
  rec.spec = spec;
  rec.timestamp = opts.reproducible ? std::string(kReproducibleTimestamp) : current_timestamp();
  try {
    const Group g = build(spec, opts.element_cap);
    VerifyOptions vo;
    vo.name = spec.name();
    vo.normal_budget = opts.normal_budget;
    vo.sample_budget = opts.sample_budget;
    vo.seed = opts.seed;
    vo.record_timings = !opts.reproducible;
    rec.report = verify_main_theorem(g, vo);
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

struct Common {
  std::size_t cap = 0;
  std::size_t budget = kDefaultNormalBudget;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  bool json = false;
  bool cap_given = false;

  std::size_t element_cap() const { return cap_given ? cap : env_cap(); }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "machine-readable output");
  sub->add_option("--cap", c.cap, "element cap for enumerated groups")->check(CLI::PositiveNumber)->each([&c](const std::string&) {
    c.cap_given = true;
  });
  sub->add_option("--budget", c.budget, "normal-subgroup search node budget")->check(CLI::PositiveNumber);
  sub->add_option("--samples", c.samples, "lemma samples per lemma")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "lemma sampling seed");
}

int cmd_analyze(const std::string& target, const Common& c, std::ostream& out) {
  const GroupSpec spec = resolve_spec(target);
  const Group g = build(spec, c.element_cap());
  const ClassSizeSet n = class_size_set(g);
  arith::IntSet nontrivial = n.sizes;
  nontrivial.erase(1);
  const auto comps =
      nontrivial.empty() ? arith::Components{} : arith::weak_components(arith::divisibility_digraph(nontrivial));
  const auto facts = arith::find_hypothesis_factorizations(n.sizes);
  const auto primes = g.order() > 1 ? arith::prime_divisors(g.order()) : std::vector<std::uint64_t>{};

  if (c.json) {
    Json j;
    j["group_name"] = spec.name();
    j["group_order"] = g.order();
    j["n_of_g"] = to_json(n);
    j["max_elements"] = int_array(nontrivial.empty() ? nontrivial : arith::max_elements(nontrivial));
    j["min_elements"] = int_array(nontrivial.empty() ? nontrivial : arith::min_elements(nontrivial));
    j["separated"] = !nontrivial.empty() && arith::is_separated(nontrivial);
    j["gamma_components"] = Json::array();
    for (const auto& part : comps.parts) j["gamma_components"].push_back(int_array(part));
    j["primes"] = Json::array();
    for (auto p : primes) {
      const auto rp = classify_rp(g, p);
      Json pj{{"p", p}, {"g_norm_p", g_double_norm_p(g, p)}, {"rp", std::string(to_string(rp.status))}};
      pj["alpha"] = rp.alpha ? Json(*rp.alpha) : Json(nullptr);
      j["primes"].push_back(pj);
    }
    j["factorizations"] = Json::array();
    for (const auto& f : facts) j["factorizations"].push_back(to_json(f));
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "group        " << spec.name() << "\n";
  out << "order        " << g.order() << "\n";
  out << "N(G)         " << arith::format_int_set(n.sizes) << "\n";
  out << "classes     ";
  for (const auto& [size, count] : n.multiplicities) out << " " << size << "x" << count;
  out << "\n";
  if (!nontrivial.empty()) {
    out << "maximal      " << arith::format_int_set(arith::max_elements(nontrivial)) << "\n";
    out << "minimal      " << arith::format_int_set(arith::min_elements(nontrivial)) << "\n";
    out << "separated    " << (arith::is_separated(nontrivial) ? "yes" : "no") << "\n";
  }
  out << "Gamma        " << comps.parts.size() << " component(s)";
  for (const auto& part : comps.parts) out << " " << arith::format_int_set(part);
  out << "\n";
  for (auto p : primes) {
    const auto rp = classify_rp(g, p);
    out << "p=" << p << "          |G||_p=" << g_double_norm_p(g, p) << " " << to_string(rp.status);
    if (rp.alpha)
      out << " alpha=" << *rp.alpha;
    else
      out << " (vacuous)";
    out << "\n";
  }
  if (facts.empty()) out << "factorizations none\n";
  for (const auto& f : facts) out << "factorization omega=" << arith::format_int_set(f.omega) << " n=" << f.n << "\n";
  return kExitOk;
}

void print_report(const TheoremReport& r, std::ostream& out) {
  out << "group    " << r.group_name << " (order " << r.group_order << ")\n";
  out << "N(G)     " << arith::format_int_set(r.n_of_g.sizes) << "\n";
  out << "verdict  " << to_string(r.verdict) << "\n";
  for (const auto& d : r.decompositions) {
    out << "  A: order " << d.a.order << ", N(A) = " << arith::format_int_set(d.a.class_sizes) << "\n";
    out << "  B: order " << d.b.order << ", N(B) = " << arith::format_int_set(d.b.class_sizes)
        << (d.n_is_prime_power ? " (prime power)" : "") << "\n";
  }
  for (const auto& [name, res] : r.lemma_results) {
    out << "  lemma " << name << ": " << to_string(res.status) << " (" << res.checked
        << (res.exhaustive ? " cases" : " sampled") << ")";
    if (!res.detail.empty()) out << " " << res.detail;
    out << "\n";
  }
}

int cmd_verify(const std::string& target, const Common& c, const std::string& out_path, bool all, std::ostream& out) {
  const GroupSpec spec = resolve_spec(target);
  const Group g = build(spec, c.element_cap());
  VerifyOptions vo;
  vo.name = spec.name();
  vo.normal_budget = c.budget;
  vo.sample_budget = c.samples;
  vo.seed = c.seed;
  vo.all_decompositions = all;
  const TheoremReport r = verify_main_theorem(g, vo);

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + out_path);
    f << to_json(r).dump(2) << "\n";
    if (!f) throw IoError("write failed for " + out_path);
  }
  if (c.json)
    out << to_json(r).dump(2) << "\n";
  else
    print_report(r, out);
  return r.verdict == Verdict::Counterexample ? kExitCounterexample : kExitOk;
}

int cmd_scan(const std::string& corpus, const std::string& out_path, unsigned jobs, bool reproducible,
             const Common& c, std::ostream& out) {
  const auto specs = corpus == "builtin" ? builtin_corpus() : corpus_from_directory(corpus);
  {
    // Fail on an unwritable destination before spending time on the scan.
    std::ofstream probe(out_path, std::ios::binary | std::ios::trunc);
    if (!probe) throw IoError("cannot write " + out_path);
  }
  ScanOptions so{c.element_cap(), c.budget, c.samples, c.seed, jobs, reproducible};
  const auto records = scan(specs, so);
  write_records(out_path, records);

  std::size_t verified = 0, not_met = 0, failed = 0, counter = 0;
  for (const auto& r : records) {
    if (!r.report) {
      ++failed;
      continue;
    }
    switch (r.report->verdict) {
      case Verdict::VerifiedDecomposition: ++verified; break;
      case Verdict::HypothesisNotMet: ++not_met; break;
      case Verdict::Counterexample: ++counter; break;
    }
  }
  if (c.json) {
    out << Json{{"groups", records.size()},         {"VerifiedDecomposition", verified},
                {"HypothesisNotMet", not_met},      {"COUNTEREXAMPLE", counter},
                {"errors", failed},                 {"out", out_path}}
               .dump(2)
        << "\n";
  } else {
    out << records.size() << " groups: " << verified << " verified, " << not_met << " hypothesis not met, "
        << counter << " counterexamples, " << failed << " errors -> " << out_path << "\n";
  }
  return counter ? kExitCounterexample : kExitOk;
}

int cmd_gamma(const std::string& csv, const std::string& dot_path, bool json, std::ostream& out) {
  const auto set = arith::parse_int_set(csv);
  const auto g = arith::divisibility_digraph(set);
  const auto comps = arith::weak_components(g);
  const std::string dot = arith::to_dot(g);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + dot_path);
    f << dot;
    if (!f) throw IoError("write failed for " + dot_path);
  }
  if (json) {
    Json j;
    j["vertices"] = int_array(g.vertices);
    j["edges"] = Json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back(Json::array({a, b}));
    j["components"] = Json::array();
    for (const auto& part : comps.parts) j["components"].push_back(int_array(part));
    j["component_count"] = comps.parts.size();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (dot_path.empty()) out << dot;
  out << "components " << comps.parts.size() << "\n";
  return kExitOk;
}

}  // namespace

std::vector<ScanRecord> scan(const std::vector<GroupSpec>& specs, const ScanOptions& opts) {
  std::vector<ScanRecord> records(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) records[i] = verify_one(specs[i], opts);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(specs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const ScanRecord& a, const ScanRecord& b) { return a.spec.name() < b.spec.name(); });
  return records;
}

std::vector<GroupSpec> corpus_from_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".grp") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<GroupSpec> out;
  for (const auto& f : files) out.push_back(GroupSpec::file(f.string()));
  return out;
}

GroupSpec resolve_spec(const std::string& text) {
  try {
    return GroupSpec::parse(text);
  } catch (const InvalidSpec&) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return GroupSpec::file(text);
    throw;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"conjlab: conjugacy class sizes and direct decompositions of finite permutation groups"};
  app.require_subcommand(1);

  Common common;
  std::string target;

  auto* analyze = app.add_subcommand("analyze", "print class-size invariants of a group");
  analyze->add_option("group", target, "spec string or .grp file")->required();
  add_common(analyze, common);

  std::string out_path;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "run the decomposition check and lemma suite");
  verify->add_option("group", target, "spec string or .grp file")->required();
  verify->add_option("--out", out_path, "also write the JSON report here");
  verify->add_flag("--all", all, "search every decomposition, not just the first");
  add_common(verify, common);

  std::string corpus = "builtin";
  std::string scan_out;
  unsigned jobs = 1;
  bool reproducible = false;
  auto* scan_cmd = app.add_subcommand("scan", "verify every group of a corpus into a JSONL file");
  scan_cmd->add_option("--corpus", corpus, "'builtin' or a directory of .grp files");
  scan_cmd->add_option("--out", scan_out, "JSONL destination")->required();
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--reproducible", reproducible, "zero timings and fix timestamps");
  add_common(scan_cmd, common);

  std::string set_csv, dot_path;
  bool gamma_json = false;
  auto* gamma = app.add_subcommand("gamma", "divisibility digraph of an integer set");
  gamma->add_option("--set", set_csv, "comma-separated positive integers")->required();
  gamma->add_option("--dot", dot_path, "write Graphviz output here");
  gamma->add_flag("--json", gamma_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(target, common, out);
    if (*verify) return cmd_verify(target, common, out_path, all, out);
    if (*scan_cmd) return cmd_scan(corpus, scan_out, jobs, reproducible, common, out);
    if (*gamma) return cmd_gamma(set_csv, dot_path, gamma_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace conjlab::cli
