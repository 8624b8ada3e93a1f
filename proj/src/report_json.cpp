#include "conjlab/report_json.hpp"

#include "conjlab/error.hpp"

namespace conjlab {

namespace {

Json int_set(const arith::IntSet& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

arith::IntSet int_set_from(const Json& j) {
  arith::IntSet s;
  for (const auto& v : j) s.insert(v.get<std::uint64_t>());
  return s;
}

Json descriptor(const FactorDescriptor& d) {
  return Json{{"order", d.order}, {"class_sizes", int_set(d.class_sizes)}, {"generators", d.generators}};
}

FactorDescriptor descriptor_from(const Json& j) {
  return {j.at("order").get<std::uint64_t>(), int_set_from(j.at("class_sizes")),
          j.at("generators").get<std::vector<std::string>>()};
}

}  // namespace

Json to_json(const arith::Factorization& f) { return Json{{"omega", int_set(f.omega)}, {"n", f.n}}; }

Json to_json(const ClassSizeSet& s) {
  Json mult = Json::object();
  for (const auto& [size, count] : s.multiplicities) mult[std::to_string(size)] = count;
  return Json{{"sizes", int_set(s.sizes)}, {"multiplicities", mult}};
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["group_name"] = r.group_name;
  j["group_order"] = r.group_order;
  j["n_of_g"] = to_json(r.n_of_g);
  j["factorizations"] = Json::array();
  for (const auto& f : r.factorizations) j["factorizations"].push_back(to_json(f));
  j["decompositions"] = Json::array();
  for (const auto& d : r.decompositions)
    j["decompositions"].push_back(Json{{"omega", int_set(d.factorization.omega)},
                                       {"n", d.factorization.n},
                                       {"n_is_prime_power", d.n_is_prime_power},
                                       {"a", descriptor(d.a)},
                                       {"b", descriptor(d.b)}});
  j["verdict"] = std::string(to_string(r.verdict));
  j["lemma_results"] = Json::object();
  for (const auto& [name, res] : r.lemma_results)
    j["lemma_results"][name] = Json{{"status", std::string(to_string(res.status))},
                                    {"checked", res.checked},
                                    {"exhaustive", res.exhaustive},
                                    {"detail", res.detail}};
  j["timings"] = Json::object();
  for (const auto& [phase, ms] : r.timings) j["timings"][phase] = ms;
  return j;
}

TheoremReport report_from_json(const Json& j) {
  try {
    TheoremReport r;
    r.group_name = j.at("group_name").get<std::string>();
    r.group_order = j.at("group_order").get<std::uint64_t>();
    r.n_of_g.sizes = int_set_from(j.at("n_of_g").at("sizes"));
    for (const auto& [k, v] : j.at("n_of_g").at("multiplicities").items())
      r.n_of_g.multiplicities[std::stoull(k)] = v.get<std::uint64_t>();
    for (const auto& f : j.at("factorizations"))
      r.factorizations.push_back({int_set_from(f.at("omega")), f.at("n").get<std::uint64_t>()});
    for (const auto& d : j.at("decompositions"))
      r.decompositions.push_back({{int_set_from(d.at("omega")), d.at("n").get<std::uint64_t>()},
                                  descriptor_from(d.at("a")),
                                  descriptor_from(d.at("b")),
                                  d.at("n_is_prime_power").get<bool>()});
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& [name, v] : j.at("lemma_results").items())
      r.lemma_results[name] = {lemma_status_from_string(v.at("status").get<std::string>()),
                               v.at("checked").get<std::uint64_t>(), v.at("exhaustive").get<bool>(),
                               v.at("detail").get<std::string>()};
    for (const auto& [phase, v] : j.at("timings").items()) r.timings[phase] = v.get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report schema: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report schema: ") + e.what());
  }
}

}  // namespace conjlab
