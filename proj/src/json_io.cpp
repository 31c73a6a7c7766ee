#include "nearfac/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>

#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

Element element_from_json(const FiniteGroup& g, const Json& e, const std::string& what) {
  // in-memory records carry signed integers even when non-negative
  if (e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
    auto code = e.get<std::uint64_t>();
    if (code > UINT32_MAX) throw DomainError(what + ": code " + e.dump() + " is not in " + g.name());
    Element x{static_cast<std::uint32_t>(code)};
    if (!g.contains(x)) throw DomainError(what + ": code " + std::to_string(x.code) + " is not in " + g.name());
    return x;
  }
  if (e.is_number_integer()) {
    if (g.id().family != GroupFamily::CyclicZ) throw DomainError(what + ": negative code " + e.dump());
    return g.parse_element(std::to_string(e.get<std::int64_t>()));
  }
  if (e.is_string()) {
    try {
      return g.parse_element(e.get<std::string>());
    } catch (const DomainError& err) {
      throw DomainError(what + ": " + err.what());
    }
  }
  throw DomainError(what + ": element must be a code or a string, got " + e.dump());
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u, v}));
  return out;
}

}  // namespace

Json element_set_json(const FiniteGroup&, const ElementSet& set) { return set_codes(set); }

ElementSet element_set_from_json(const FiniteGroup& g, const Json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array");
  std::vector<Element> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(element_from_json(g, j[i], what + "[" + std::to_string(i) + "]"));
  }
  try {
    return make_set(std::move(out));
  } catch (const DomainError& err) {
    throw DomainError(what + ": " + err.what());
  }
}

Json to_json(const NearFactorization& nf) {
  const auto& g = *nf.group();
  Json a_text = Json::array(), b_text = Json::array();
  for (auto x : nf.a()) a_text.push_back(g.render(x));
  for (auto x : nf.b()) b_text.push_back(g.render(x));
  return Json{{"group", g.id().to_string()},
              {"A", set_codes(nf.a())},
              {"B", set_codes(nf.b())},
              {"A_text", a_text},
              {"B_text", b_text}};
}

NearFactorization nf_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("NF record must be a JSON object");
  if (!j.contains("group") || !j["group"].is_string()) throw DomainError("NF record needs a \"group\" string");
  if (!j.contains("A") || !j.contains("B")) throw DomainError("NF record needs \"A\" and \"B\"");
  auto g = make_group(j["group"].get<std::string>());
  return NearFactorization(g, element_set_from_json(*g, j["A"], "A"), element_set_from_json(*g, j["B"], "B"));
}

Json to_json(const VerificationReport& r, const FiniteGroup& g) {
  Json uncovered = Json::array(), multiple = Json::array();
  for (auto x : r.uncovered) uncovered.push_back(g.render(x));
  for (auto [x, n] : r.multiply_covered) multiple.push_back(Json{{"element", g.render(x)}, {"count", n}});
  return Json{{"is_nf", r.is_nf},
              {"reason", r.reason},
              {"identity_representations", r.identity_representations},
              {"uncovered", uncovered},
              {"multiply_covered", multiple}};
}

Json to_json(const EquivalenceMap& m) {
  return Json{{"f", m.f.describe()}, {"h", m.f.group()->render(m.h)}, {"h_code", m.h.code}, {"text", m.describe()}};
}

Json to_json(const CriticalReport& r) {
  return Json{{"alpha", r.alpha},
              {"omega", r.omega},
              {"alpha_critical_edges", edges_json(r.alpha_critical_edges)},
              {"omega_critical_nonedges", edges_json(r.omega_critical_nonedges)},
              {"alternating", r.alternating}};
}

Json to_json(const EnumerationResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back(Json{{"canonical", to_json(c.canonical)}, {"example", to_json(c.example)}, {"solutions", c.solutions}});
  }
  Json out{{"classes", classes},
           {"class_count", r.classes.size()},
           {"complete", r.complete},
           {"nodes_explored", r.nodes_explored},
           {"wall_seconds", r.wall_seconds},
           {"solutions_found", r.solutions_found},
           {"tasks_total", r.tasks_total},
           {"tasks_done", r.tasks_done},
           {"tasks_resumed", r.tasks_resumed}};
  if (r.classes_up_to_swap) out["classes_up_to_swap"] = *r.classes_up_to_swap;
  return out;
}

Json to_json(const SweepEntry& e) {
  return Json{{"n", e.n},         {"k", e.k},          {"l", e.l},           {"classes", e.classes},
              {"complete", e.complete}, {"nodes", e.nodes}, {"seconds", e.seconds}};
}

Json to_json(const GsedfInstance& inst) {
  Json sets = Json::array();
  for (const auto& s : inst.sets) sets.push_back(set_codes(s));
  return Json{{"group", inst.group->id().to_string()}, {"sets", sets}, {"lambdas", inst.lambdas}};
}

GsedfInstance gsedf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("sets") || !j.contains("lambdas")) {
    throw DomainError("GSEDF record needs \"group\", \"sets\" and \"lambdas\"");
  }
  GsedfInstance inst;
  inst.group = make_group(j["group"].get<std::string>());
  const auto& sets = j["sets"];
  if (!sets.is_array()) throw DomainError("\"sets\" must be an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    inst.sets.push_back(element_set_from_json(*inst.group, sets[i], "sets[" + std::to_string(i) + "]"));
  }
  const auto& lambdas = j["lambdas"];
  auto valid = [](const Json& x) {
    return x.is_number_integer() && x.get<std::int64_t>() >= 0 && x.get<std::int64_t>() <= UINT32_MAX;
  };
  if (!lambdas.is_array() || !std::all_of(lambdas.begin(), lambdas.end(), valid)) {
    throw DomainError("\"lambdas\" must be an array of non-negative integers");
  }
  for (const auto& x : lambdas) inst.lambdas.push_back(x.get<std::uint32_t>());
  return inst;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace nearfac
