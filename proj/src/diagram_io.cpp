#include "contactsurg/diagram_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace contactsurg {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                           ": invalid JSON");
  }
}

void check_keys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema_error(where, "unknown field \"" + key + "\"");
  }
  for (auto key : required) {
    if (!obj.contains(std::string(key))) schema_error(where, "missing field \"" + std::string(key) + "\"");
  }
}

std::string child(const std::string& where, std::string_view key) { return where + "/" + std::string(key); }
std::string child(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

std::string read_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

bool read_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) schema_error(where, "expected a boolean");
  return j.get<bool>();
}

std::int64_t read_int64(const Json& j, const std::string& where) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(u);
  }
  schema_error(where, "expected a 64-bit integer");
}

// Integers that fit in 64 bits are written as numbers, larger ones as
// decimal strings.
Json write_integer(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Integer read_integer(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      const Rational r = Rational::parse(s);
      if (r.is_finite() && r.is_integer()) return r.num();
    } catch (const Error&) {
    }
    schema_error(where, "expected an integer, got \"" + s + "\"");
  }
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  schema_error(where, "expected an integer");
}

Rational read_rational(const Json& j, const std::string& where) {
  const std::string s = read_string(j, where);
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    schema_error(where, e.what());
  }
}

Json write_matrix(const IntMat2& m) {
  return Json::array({Json::array({write_integer(m(0, 0)), write_integer(m(0, 1))}),
                      Json::array({write_integer(m(1, 0)), write_integer(m(1, 1))})});
}

IntMat2 read_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
    schema_error(where, "expected a 2x2 array");
  }
  IntMat2 m;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = read_integer(j[r][c], child(child(where, r), c));
    }
  }
  return m;
}

Json write_front(const FrontWord& word) {
  Json out = Json::array();
  for (const auto& e : word) {
    out.push_back(e.kind == EventKind::LeftCusp ? "L" : e.kind == EventKind::RightCusp ? "R" : "X");
    out.push_back(e.position);
  }
  return out;
}

FrontWord read_front(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() % 2 != 0) schema_error(where, "expected [tag, position, ...] pairs");
  FrontWord word;
  for (std::size_t i = 0; i < j.size(); i += 2) {
    const std::string tag = read_string(j[i], child(where, i));
    const std::int64_t pos = read_int64(j[i + 1], child(where, i + 1));
    if (pos < std::numeric_limits<int>::min() || pos > std::numeric_limits<int>::max()) {
      schema_error(child(where, i + 1), "position out of range");
    }
    EventKind kind;
    if (tag == "L") {
      kind = EventKind::LeftCusp;
    } else if (tag == "R") {
      kind = EventKind::RightCusp;
    } else if (tag == "X") {
      kind = EventKind::Cross;
    } else {
      schema_error(child(where, i), "unknown event \"" + tag + "\" (expected L, R or X)");
    }
    word.push_back({kind, static_cast<int>(pos)});
  }
  return word;
}

// ---------------------------------------------------------------------------
// Diagram files

Json write_component(const DiagramComponent& c) {
  Json out;
  out["id"] = c.id;
  out["coefficient"] = c.coefficient.str();
  if (const auto* word = std::get_if<FrontWord>(&c.knot)) {
    out["knot"] = {{"front", write_front(*word)}};
  } else {
    const auto& data = std::get<LegendrianKnotData>(c.knot);
    out["knot"] = {{"tb", data.tb}, {"rot", data.rot}, {"type", data.type}};
  }
  if (!c.linking.empty()) {
    Json lk = Json::object();
    for (const auto& [id, value] : c.linking) lk[id] = value;
    out["linking"] = lk;
  }
  return out;
}

DiagramComponent read_component(const Json& j, const std::string& where) {
  check_keys(j, where, {"id", "coefficient", "knot"}, {"linking"});
  DiagramComponent c;
  c.id = read_string(j["id"], child(where, "id"));
  c.coefficient = read_rational(j["coefficient"], child(where, "coefficient"));
  const std::string kw = child(where, "knot");
  const Json& knot = j["knot"];
  if (knot.is_object() && knot.contains("front")) {
    check_keys(knot, kw, {"front"});
    c.knot = read_front(knot["front"], child(kw, "front"));
  } else {
    check_keys(knot, kw, {"tb", "rot", "type"});
    c.knot = LegendrianKnotData{read_int64(knot["tb"], child(kw, "tb")), read_int64(knot["rot"], child(kw, "rot")),
                                read_string(knot["type"], child(kw, "type"))};
  }
  if (j.contains("linking")) {
    const std::string lw = child(where, "linking");
    if (!j["linking"].is_object()) schema_error(lw, "expected an object of id -> integer");
    for (const auto& [id, value] : j["linking"].items()) c.linking[id] = read_int64(value, child(lw, id));
  }
  return c;
}

void check_version(const Json& j, std::string_view expected) {
  const std::string v = read_string(j["version"], "/version");
  if (v != expected) schema_error("/version", "unsupported version \"" + v + "\", expected \"" + std::string(expected) + "\"");
}

// ---------------------------------------------------------------------------
// Result files

Json write_certificate(const ConversionCertificate& c) {
  Json out;
  out["coefficient"] = c.coefficient.str();
  out["target"] = c.target.str();
  Json cf = Json::array();
  for (const auto& a : c.cf) cf.push_back(write_integer(a));
  out["cf"] = cf;
  out["product"] = write_matrix(c.product);
  out["slope"] = c.slope.str();
  out["k"] = write_integer(c.k);
  out["tight_count"] = write_integer(c.tight_count);
  out["composite"] = c.composite ? write_matrix(*c.composite) : Json(nullptr);
  Json clauses = Json::array();
  for (const auto& clause : c.identity_check) clauses.push_back({{"name", clause.name}, {"passed", clause.passed}});
  out["clauses"] = clauses;
  return out;
}

ConversionCertificate read_certificate(const Json& j, const std::string& where) {
  check_keys(j, where, {"coefficient", "target", "cf", "product", "slope", "k", "tight_count", "composite", "clauses"});
  ConversionCertificate c{read_rational(j["coefficient"], child(where, "coefficient")),
                          read_rational(j["target"], child(where, "target")),
                          {},
                          read_matrix(j["product"], child(where, "product")),
                          read_rational(j["slope"], child(where, "slope")),
                          read_integer(j["k"], child(where, "k")),
                          read_integer(j["tight_count"], child(where, "tight_count")),
                          std::nullopt,
                          {}};
  const std::string cw = child(where, "cf");
  if (!j["cf"].is_array()) schema_error(cw, "expected an array");
  for (std::size_t i = 0; i < j["cf"].size(); ++i) c.cf.push_back(read_integer(j["cf"][i], child(cw, i)));
  if (!j["composite"].is_null()) c.composite = read_matrix(j["composite"], child(where, "composite"));
  const std::string lw = child(where, "clauses");
  if (!j["clauses"].is_array()) schema_error(lw, "expected an array");
  for (std::size_t i = 0; i < j["clauses"].size(); ++i) {
    const Json& item = j["clauses"][i];
    const std::string iw = child(lw, i);
    check_keys(item, iw, {"name", "passed"});
    c.identity_check.push_back({read_string(item["name"], child(iw, "name")), read_bool(item["passed"], child(iw, "passed"))});
  }
  return c;
}

Json write_result(const PmOneDiagram& d) {
  Json out;
  out["version"] = kResultVersion;
  out["policy"] = d.policy;
  out["dropped"] = d.dropped;
  Json chains = Json::array();
  for (const auto& chain : d.chains) {
    Json cj;
    cj["parent"] = chain.parent;
    cj["coefficient"] = chain.coefficient.str();
    Json ins = Json::array();
    for (const auto& i : chain.instructions) {
      ins.push_back({{"coefficient", i.coefficient},
                     {"level", i.level},
                     {"tb_local", i.tb_local},
                     {"rot", i.rot},
                     {"parent", i.parent},
                     {"provenance", to_string(i.provenance)}});
    }
    cj["instructions"] = ins;
    cj["certificate"] = chain.certificate ? write_certificate(*chain.certificate) : Json(nullptr);
    chains.push_back(cj);
  }
  out["chains"] = chains;
  return out;
}

PmOneDiagram read_result(const Json& j) {
  check_keys(j, "", {"version", "policy", "dropped", "chains"});
  check_version(j, kResultVersion);
  PmOneDiagram d;
  d.policy = read_string(j["policy"], "/policy");
  if (!j["dropped"].is_array()) schema_error("/dropped", "expected an array");
  for (std::size_t i = 0; i < j["dropped"].size(); ++i) d.dropped.push_back(read_string(j["dropped"][i], child("/dropped", i)));
  if (!j["chains"].is_array()) schema_error("/chains", "expected an array");
  for (std::size_t c = 0; c < j["chains"].size(); ++c) {
    const Json& cj = j["chains"][c];
    const std::string cw = child("/chains", c);
    check_keys(cj, cw, {"parent", "coefficient", "instructions", "certificate"});
    ChainConversion chain{read_string(cj["parent"], child(cw, "parent")),
                          read_rational(cj["coefficient"], child(cw, "coefficient")),
                          {},
                          std::nullopt};
    const std::string iw = child(cw, "instructions");
    if (!cj["instructions"].is_array()) schema_error(iw, "expected an array");
    for (std::size_t i = 0; i < cj["instructions"].size(); ++i) {
      const Json& ij = cj["instructions"][i];
      const std::string w = child(iw, i);
      check_keys(ij, w, {"coefficient", "level", "tb_local", "rot", "parent", "provenance"});
      const std::int64_t coefficient = read_int64(ij["coefficient"], child(w, "coefficient"));
      const std::int64_t level = read_int64(ij["level"], child(w, "level"));
      if (coefficient < std::numeric_limits<int>::min() || coefficient > std::numeric_limits<int>::max()) {
        schema_error(child(w, "coefficient"), "out of range");
      }
      if (level < 0) schema_error(child(w, "level"), "negative level");
      Provenance provenance;
      try {
        provenance = parse_provenance(read_string(ij["provenance"], child(w, "provenance")));
      } catch (const Error& e) {
        schema_error(child(w, "provenance"), e.what());
      }
      chain.instructions.push_back({static_cast<int>(coefficient), static_cast<std::size_t>(level),
                                    read_int64(ij["tb_local"], child(w, "tb_local")),
                                    read_int64(ij["rot"], child(w, "rot")),
                                    read_string(ij["parent"], child(w, "parent")), provenance});
    }
    if (!cj["certificate"].is_null()) chain.certificate = read_certificate(cj["certificate"], child(cw, "certificate"));
    d.chains.push_back(std::move(chain));
  }
  return d;
}

}  // namespace

DiagramFile parse_diagram_file(std::string_view text) {
  const Json j = parse_json(text);
  check_keys(j, "", {"version", "components"}, {"options"});
  check_version(j, kDiagramVersion);
  DiagramFile file;
  if (!j["components"].is_array()) schema_error("/components", "expected an array");
  for (std::size_t i = 0; i < j["components"].size(); ++i) {
    file.diagram.components.push_back(read_component(j["components"][i], child("/components", i)));
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    check_keys(o, "/options", {}, {"policy", "enumerate"});
    DiagramOptions options;
    if (o.contains("policy")) {
      options.policy = read_string(o["policy"], "/options/policy");
      StabilizationPolicy::parse(*options.policy);
    }
    if (o.contains("enumerate")) options.enumerate = read_bool(o["enumerate"], "/options/enumerate");
    file.options = options;
  }
  validate_diagram(file.diagram);
  return file;
}

std::string dump_diagram_file(const DiagramFile& file) {
  Json out;
  out["version"] = kDiagramVersion;
  Json components = Json::array();
  for (const auto& c : file.diagram.components) components.push_back(write_component(c));
  out["components"] = components;
  if (file.options) {
    Json o = Json::object();
    if (file.options->policy) o["policy"] = *file.options->policy;
    if (file.options->enumerate) o["enumerate"] = *file.options->enumerate;
    out["options"] = o;
  }
  return out.dump(2) + "\n";
}

PmOneDiagram parse_result(std::string_view text) { return read_result(parse_json(text)); }

std::string dump_result(const PmOneDiagram& diagram, bool compact) {
  const Json j = write_result(diagram);
  return (compact ? j.dump() : j.dump(2)) + "\n";
}

std::string document_version(std::string_view text) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("version") && j["version"].is_string()) return j["version"].get<std::string>();
  return {};
}

std::vector<PmOneDiagram> parse_results(std::string_view text) {
  std::vector<PmOneDiagram> out;
  if (!Json::accept(text.begin(), text.end())) {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_result(line));
    }
    return out;
  }
  const Json j = parse_json(text);
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(read_result(item));
  } else {
    out.push_back(read_result(j));
  }
  return out;
}

FrontWord parse_front(std::string_view json_array) {
  FrontWord word = read_front(parse_json(json_array), "");
  validate(word);
  return word;
}

std::string dump_front(const FrontWord& word) { return write_front(word).dump(); }

}  // namespace contactsurg
