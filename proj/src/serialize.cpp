#include "fundom/serialize.hpp"

#include <json.hpp>

namespace fundom {

namespace {

using nlohmann::json;

PermGroup parse_group(const json& node) {
  if (!node.is_object()) throw InvalidArgument("group spec must be a JSON object");
  std::string kind = node.value("kind", std::string("generators"));
  if (!node.contains("degree") || !node["degree"].is_number_integer())
    throw InvalidArgument("group spec needs an integer \"degree\"");
  const int degree = node["degree"].get<int>();
  if (degree < 1) throw InvalidArgument("group degree must be >= 1");

  if (kind == "symmetric") return symmetric_group(degree);
  if (kind == "alternating") return alternating_group(degree);
  if (kind == "cyclic") return cyclic_group(degree);
  if (kind == "dihedral") return dihedral_group(degree);
  if (kind != "generators") throw InvalidArgument("unknown group kind \"" + kind + "\"");

  if (!node.contains("generators") || !node["generators"].is_array())
    throw InvalidArgument("generator spec needs a \"generators\" array");
  std::vector<Perm> gens;
  for (const json& g : node["generators"]) {
    if (g.is_string()) {
      gens.push_back(Perm::from_cycles(g.get<std::string>(), degree));
    } else if (g.is_object() && g.contains("images")) {
      gens.push_back(Perm::from_images(g["images"].get<std::vector<int>>()));
      if (gens.back().degree() != degree) throw InvalidArgument("generator degree mismatch");
    } else {
      throw InvalidArgument("generators must be cycle strings or {\"images\": [...]} objects");
    }
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return PermGroup::from_generators(degree, std::move(gens));
}

ActionSpec parse_spec(const json& node) {
  if (!node.is_object()) throw InvalidArgument("action spec must be a JSON object");
  if (node.contains("tensor")) {
    if (!node["tensor"].is_array() || node["tensor"].empty())
      throw InvalidArgument("\"tensor\" must be a nonempty array of group specs");
    std::vector<PermGroup> factors;
    for (const json& f : node["tensor"]) factors.push_back(parse_group(f));
    return ActionSpec::tensor(std::move(factors));
  }
  if (node.contains("direct_sum")) {
    if (!node["direct_sum"].is_array() || node["direct_sum"].empty())
      throw InvalidArgument("\"direct_sum\" must be a nonempty array of specs");
    std::vector<ActionSpec> factors;
    for (const json& f : node["direct_sum"]) factors.push_back(parse_spec(f));
    return ActionSpec::direct_sum(std::move(factors));
  }
  return ActionSpec::plain(parse_group(node));
}

json group_to_json(const PermGroup& group) {
  switch (group.kind) {
    case GroupKind::Symmetric: return json{{"kind", "symmetric"}, {"degree", group.degree}};
    case GroupKind::Alternating: return json{{"kind", "alternating"}, {"degree", group.degree}};
    case GroupKind::Cyclic: return json{{"kind", "cyclic"}, {"degree", group.degree}};
    case GroupKind::Dihedral: return json{{"kind", "dihedral"}, {"degree", group.degree}};
    case GroupKind::Generic: break;
  }
  json gens = json::array();
  for (const Perm& g : group.generators) gens.push_back(g.cycles());
  return json{{"kind", "generators"}, {"degree", group.degree}, {"generators", gens}};
}

json spec_to_json(const ActionSpec& spec) {
  if (const auto* plain = std::get_if<PlainAction>(&spec.node)) return group_to_json(plain->group);
  if (const auto* sum = std::get_if<DirectSumAction>(&spec.node)) {
    json factors = json::array();
    for (const ActionSpec& f : sum->factors) factors.push_back(spec_to_json(f));
    return json{{"direct_sum", factors}};
  }
  const auto& tensor = std::get<TensorAction>(spec.node);
  json factors = json::array();
  for (const PermGroup& f : tensor.factors) factors.push_back(group_to_json(f));
  return json{{"tensor", factors}};
}

}  // namespace

ActionSpec parse_action_spec(const std::string& json_text) {
  json node = json::parse(json_text, nullptr, false);
  if (node.is_discarded()) throw InvalidArgument("group spec is not valid JSON");
  return parse_spec(node);
}

std::string action_spec_to_json(const ActionSpec& spec) { return spec_to_json(spec).dump(); }

std::string perm_to_json(const Perm& p) {
  return json{{"degree", p.degree()}, {"images", p.images()}}.dump();
}

Perm perm_from_json(const std::string& json_text) {
  json node = json::parse(json_text, nullptr, false);
  if (node.is_discarded() || !node.is_object() || !node.contains("images"))
    throw InvalidArgument("permutation JSON needs an \"images\" array");
  Perm p = Perm::from_images(node["images"].get<std::vector<int>>());
  if (node.contains("degree") && node["degree"].get<int>() != p.degree())
    throw InvalidArgument("permutation degree does not match its images");
  return p;
}

}  // namespace fundom
