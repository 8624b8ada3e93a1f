#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "conjlab/cli.hpp"
#include "conjlab/report_json.hpp"

using namespace conjlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "conjlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("conjlab_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "alternating:5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("N(G)         {1,12,15,20}") != std::string::npos);
  CHECK(r.out.find("Gamma        3 component(s)") != std::string::npos);
  CHECK(r.out.find("p=2") != std::string::npos);

  r = run({"analyze", "cyclic:6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("N(G)         {1}") != std::string::npos);
  CHECK(r.out.find("(vacuous)") != std::string::npos);

  r = run({"analyze", "direct:frobenius:5,4+heisenberg:3", "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("group_order") == 540);
  REQUIRE(j.at("factorizations").size() == 1);
  CHECK(j.at("factorizations")[0].at("n") == 3);
  CHECK(j.at("gamma_components").size() == 1);
}

TEST_CASE("analyze a .grp file") {
  const auto path = temp("s3.grp");
  { std::ofstream(path) << "degree 3\nname s3\n(0 1)\n(0 1 2)\n"; }
  auto r = run({"analyze", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("order        6") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  auto r = run({"verify", "direct:frobenius:5,4+heisenberg:3", "--json"});
  REQUIRE(r.code == 0);
  const auto report = report_from_json(Json::parse(r.out));
  CHECK(report.verdict == Verdict::VerifiedDecomposition);

  r = run({"verify", "symmetric:4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("HypothesisNotMet") != std::string::npos);

  const auto path = temp("report.json");
  r = run({"verify", "symmetric:3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(report_from_json(Json::parse(slurp(path))).group_order == 6);
  std::filesystem::remove(path);
}

TEST_CASE("usage and budget errors exit 2") {
  CHECK(run({"verify", "cyclic:"}).code == 2);
  CHECK(run({"verify", "nonsense:3"}).code == 2);
  CHECK(run({"analyze", "heisenberg:4"}).code == 2);
  CHECK(run({"verify", "direct:frobenius:5,4+heisenberg:3", "--budget", "2"}).code == 2);
  CHECK(run({"analyze", "symmetric:6", "--cap", "100"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gamma"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto r = run({"verify", "cyclic:0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("CONJLAB_CAP and --cap precedence") {
  ::setenv("CONJLAB_CAP", "100", 1);
  CHECK(run({"analyze", "symmetric:5"}).code == 2);
  CHECK(run({"analyze", "symmetric:5", "--cap", "1000"}).code == 0);
  ::setenv("CONJLAB_CAP", "abc", 1);
  CHECK(run({"analyze", "symmetric:3"}).code == 2);
  ::unsetenv("CONJLAB_CAP");
  CHECK(run({"analyze", "symmetric:5"}).code == 0);
}

TEST_CASE("gamma") {
  auto r = run({"gamma", "--set", "12,15,20"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("components 3") != std::string::npos);

  r = run({"gamma", "--set", "2,4,8"});
  CHECK(r.out.find("components 1") != std::string::npos);

  const auto dot = temp("g.dot");
  r = run({"gamma", "--set", "3,6,8", "--dot", dot.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "components 2\n");
  CHECK(slurp(dot).find(R"("3" -> "6")") != std::string::npos);
  std::filesystem::remove(dot);

  r = run({"gamma", "--set", "3,6,8", "--json"});
  CHECK(Json::parse(r.out).at("component_count") == 2);

  CHECK(run({"gamma", "--set", "3,x"}).code == 2);
  CHECK(run({"gamma", "--set", "3,6", "--dot", "/nonexistent-dir/g.dot"}).code == 2);
}

TEST_CASE("scan of a directory corpus") {
  const auto dir = temp("corpus");
  std::filesystem::create_directories(dir);
  { std::ofstream(dir / "s3.grp") << "degree 3\nname s3\n(0 1)\n(0 1 2)\n"; }
  { std::ofstream(dir / "bad.grp") << "degree 3\nname bad\n(0 1\n"; }
  { std::ofstream(dir / "notes.txt") << "ignored\n"; }

  const auto out = temp("scan.jsonl");
  auto r = run({"scan", "--corpus", dir.string(), "--out", out.string(), "--reproducible"});
  CHECK(r.code == 0);
  const auto recs = read_records(out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].spec.path.ends_with("bad.grp"));
  CHECK_FALSE(recs[0].error.empty());
  CHECK_FALSE(recs[0].report.has_value());
  CHECK(recs[1].report->verdict == Verdict::HypothesisNotMet);
  CHECK(recs[1].timestamp == cli::kReproducibleTimestamp);

  CHECK(run({"scan", "--corpus", dir.string(), "--out", "/nonexistent-dir/x.jsonl"}).code == 2);
  CHECK(run({"scan", "--corpus", (dir / "missing").string(), "--out", out.string()}).code == 2);
  std::filesystem::remove_all(dir);
  std::filesystem::remove(out);
}

TEST_CASE("scan output is sorted and independent of job count") {
  const std::vector<GroupSpec> specs{GroupSpec::symmetric(4), GroupSpec::cyclic(7), GroupSpec::frobenius(5, 4),
                                     GroupSpec::direct({GroupSpec::frobenius(5, 4), GroupSpec::heisenberg(3)}),
                                     GroupSpec::alternating(4), GroupSpec::symmetric(9)};
  cli::ScanOptions one;
  one.reproducible = true;
  one.seed = 9;
  cli::ScanOptions four = one;
  four.jobs = 4;
  const auto a = cli::scan(specs, one);
  const auto b = cli::scan(specs, four);
  REQUIRE(a.size() == specs.size());
  CHECK(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].spec.name() < a[i].spec.name());
  std::string la, lb;
  for (const auto& r : a) la += to_jsonl_line(r) + "\n";
  for (const auto& r : b) lb += to_jsonl_line(r) + "\n";
  CHECK(la == lb);
}

TEST_CASE("the installed binary honours the exit-code contract") {
  const std::string bin = CONJLAB_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("verify symmetric:4") == 0);
  CHECK(status("verify not-a-spec") == 2);
  CHECK(status("gamma --set 12,15,20") == 0);
  CHECK(status("--help") == 0);
}
