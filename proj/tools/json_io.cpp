#include "json_io.hpp"

namespace foldweyl::io {

Json to_json(const FieldElement& x) {
  Json c = Json::array();
  for (int k = 0; k < 4; ++k) c.push_back(to_string(x.coeff(k)));
  // The tag only matters when zeta is irrational and actually occurs.
  const bool zeta = x.coeff(1) != 0 || x.coeff(3) != 0;
  return Json{{"m", zeta ? x.tag() : 1}, {"c", c}};
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a \"num/den\" string, got " + j.dump());
}

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw InputError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

FieldElement scalar_from_json(const Json& j) {
  if (!j.is_object()) return FieldElement(rational_from_json(j));
  const int m = j.contains("m") ? require_int(j, "m") : 1;
  if (!j.contains("c") || !j["c"].is_array() || j["c"].size() != 4)
    throw InputError("a scalar needs \"c\": an array of four \"num/den\" strings");
  const Json& c = j["c"];
  return FieldElement::make(m, rational_from_json(c[0]), rational_from_json(c[1]), rational_from_json(c[2]),
                            rational_from_json(c[3]));
}

namespace {

Json factors_json(const std::vector<Factor>& fs, const std::vector<int>* i0) {
  Json out = Json::array();
  for (const auto& f : fs)
    out.push_back({{"node", (i0 ? (*i0)[f.node] : f.node) + 1}, {"param", to_json(f.param)}, {"mult", f.mult}});
  return out;
}

}  // namespace

Json to_json(const DrinfeldTuple& pi, int m) {
  return Json{{"type", std::string(1, pi.datum().type)},
              {"rank", pi.datum().rank},
              {"m", m},
              {"twisted", false},
              {"factors", factors_json(pi.factors(), nullptr)}};
}

Json to_json(const TwistedDrinfeldTuple& pi) {
  const DiagramFold& f = pi.fold();
  return Json{{"type", std::string(1, f.parent.type)},
              {"rank", f.parent.rank},
              {"m", f.m},
              {"twisted", true},
              {"factors", factors_json(pi.factors(), &f.i0)}};
}

AnyTuple tuple_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("a tuple must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string() || j["type"].get<std::string>().size() != 1)
    throw InputError("missing one-letter field \"type\"");
  const char type = j["type"].get<std::string>()[0];
  const int rank = require_int(j, "rank");
  AnyTuple t;
  t.m = j.contains("m") ? require_int(j, "m") : 1;
  if (j.contains("twisted")) {
    if (!j["twisted"].is_boolean()) throw InputError("\"twisted\" must be a boolean");
    t.twisted = j["twisted"].get<bool>();
  }
  const Json empty = Json::array();
  const Json& fs = j.contains("factors") ? j["factors"] : empty;
  if (!fs.is_array()) throw InputError("\"factors\" must be an array");

  std::vector<Factor> factors;
  DiagramFold fold;
  if (t.twisted) fold = DiagramFold::make(type, rank, t.m);
  for (const auto& fj : fs) {
    if (!fj.is_object()) throw InputError("a factor must be an object");
    Factor f;
    const int node = require_int(fj, "node");
    f.mult = fj.contains("mult") ? require_int(fj, "mult") : 1;
    if (!fj.contains("param")) throw InputError("factor without \"param\"");
    f.param = scalar_from_json(fj["param"]);
    if (t.twisted) {
      f.node = fold.folded_index(node - 1);
      if (node < 1 || node > rank || f.node < 0)
        throw InputError("node " + std::to_string(node) + " is not the first node of its orbit");
    } else {
      f.node = node - 1;
    }
    factors.push_back(f);
  }
  if (t.twisted)
    t.folded = TwistedDrinfeldTuple(fold, std::move(factors));
  else
    t.untwisted = DrinfeldTuple(CartanDatum::make(type, rank), std::move(factors));
  return t;
}

Json weight_json(const Weight& w) { return Json(w); }

Json character_json(const Character& ch) {
  Json out = Json::array();
  for (const auto& [w, mult] : ch) out.push_back({{"weight", weight_json(w)}, {"mult", mult}});
  return out;
}

Json tree_json(const FactorNode& node) {
  Json j{{"label", node.label}, {"dimension", node.dimension}, {"power", node.power}};
  if (!node.children.empty()) {
    Json c = Json::array();
    for (const auto& ch : node.children) c.push_back(tree_json(ch));
    j["children"] = c;
  }
  return j;
}

}  // namespace foldweyl::io
