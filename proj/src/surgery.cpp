#include "contactsurg/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace contactsurg {

// ---------------------------------------------------------------------------
// Diagram model

void validate_diagram(const ContactDiagram& diagram) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < diagram.components.size(); ++i) {
    const auto& c = diagram.components[i];
    if (c.id.empty()) throw Error(ErrorKind::InvalidDiagram, "component " + std::to_string(i) + " has an empty id");
    if (!index.emplace(c.id, i).second) throw Error(ErrorKind::InvalidDiagram, "duplicate component id " + c.id);
  }

  std::vector<std::pair<std::string, std::string>> failures;
  std::optional<ErrorKind> first_kind;
  for (const auto& c : diagram.components) {
    try {
      if (const auto* word = std::get_if<FrontWord>(&c.knot)) {
        const std::size_t n = validate(*word);
        if (n != 1) {
          throw Error(ErrorKind::InvalidDiagram, "front has " + std::to_string(n) + " components, expected 1");
        }
      } else {
        check_knot_data(std::get<LegendrianKnotData>(c.knot));
      }
      for (const auto& [other, lk] : c.linking) {
        if (other == c.id) throw Error(ErrorKind::InvalidDiagram, "links itself");
        auto it = index.find(other);
        if (it == index.end()) throw Error(ErrorKind::InvalidDiagram, "links unknown component " + other);
        const auto& back = diagram.components[it->second].linking;
        if (auto b = back.find(c.id); b != back.end() && b->second != lk) {
          throw Error(ErrorKind::InvalidDiagram, "asymmetric linking with " + other);
        }
      }
    } catch (const Error& e) {
      if (!first_kind) first_kind = e.kind();
      failures.emplace_back(c.id, e.what());
    }
  }
  if (failures.empty()) return;
  std::string message = "invalid diagram";
  for (const auto& [id, what] : failures) message += "; component " + id + ": " + what;
  throw ConversionError(*first_kind, message, std::move(failures));
}

std::int64_t component_tb(const DiagramComponent& component) {
  if (const auto* word = std::get_if<FrontWord>(&component.knot)) {
    return thurston_bennequin(OrientedFront(*word), 0);
  }
  return std::get<LegendrianKnotData>(component.knot).tb;
}

std::optional<std::int64_t> linking_between(const ContactDiagram& diagram, std::size_t i, std::size_t j) {
  const auto& a = diagram.components.at(i);
  const auto& b = diagram.components.at(j);
  if (auto it = a.linking.find(b.id); it != a.linking.end()) return it->second;
  if (auto it = b.linking.find(a.id); it != b.linking.end()) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Provenance and policy

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Passthrough: return "passthrough";
    case Provenance::RationalChain: return "rational-chain";
    case Provenance::PushOff: return "push-off";
    case Provenance::ZeroSurgery: return "zero-surgery";
    case Provenance::SimpleLutz: return "simple-lutz";
    case Provenance::FullLutz: return "full-lutz";
  }
  return "unknown";
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::Passthrough, Provenance::RationalChain, Provenance::PushOff, Provenance::ZeroSurgery,
                 Provenance::SimpleLutz, Provenance::FullLutz}) {
    if (to_string(p) == text) return p;
  }
  throw Error(ErrorKind::ParseError, "unknown provenance \"" + std::string(text) + "\"");
}

StabilizationPolicy StabilizationPolicy::parse(std::string_view text) {
  if (text == "all-negative") return all_negative();
  if (text == "all-positive") return all_positive();
  constexpr std::string_view prefix = "tuple=";
  if (!text.starts_with(prefix)) {
    throw Error(ErrorKind::ParseError, "unknown policy \"" + std::string(text) + "\"");
  }
  std::vector<std::int64_t> values;
  std::string_view rest = text.substr(prefix.size());
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::ParseError, "bad tuple entry \"" + std::string(item) + "\"");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw Error(ErrorKind::ParseError, "trailing comma in policy tuple");
  }
  return from_tuple(std::move(values));
}

std::string StabilizationPolicy::str() const {
  switch (kind) {
    case Kind::AllNegative: return "all-negative";
    case Kind::AllPositive: return "all-positive";
    case Kind::Tuple: break;
  }
  std::string out = "tuple=";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  return out;
}

std::vector<std::int64_t> allowed_rotations(std::int64_t tb) {
  if (tb > -1) throw Error(ErrorKind::BadChoice, "tb " + std::to_string(tb) + " > -1 admits no unknot");
  const std::int64_t m = -tb - 1;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m + 1));
  for (std::int64_t r = -m; r <= m; r += 2) out.push_back(r);
  return out;
}

bool rotation_allowed(std::int64_t tb, std::int64_t rot) {
  if (tb > -1) return false;
  const std::int64_t m = -tb - 1;
  return rot >= -m && rot <= m && (rot + m) % 2 == 0;
}

// ---------------------------------------------------------------------------
// Conversions

namespace {

PmOneInstruction make_instruction(const std::string& parent, int coefficient, std::size_t level,
                                  std::int64_t tb, std::int64_t rot, Provenance provenance) {
  return PmOneInstruction{coefficient, level, tb, rot, parent, provenance};
}

// (-1)-chain for a negative target; levels start at `first_level`.
std::vector<PmOneInstruction> negative_chain(const std::string& parent, const std::vector<Integer>& rs,
                                             std::size_t first_level,
                                             const std::optional<std::vector<std::int64_t>>& choices) {
  if (choices && choices->size() != rs.size()) {
    throw Error(ErrorKind::BadChoice, "expected " + std::to_string(rs.size()) + " rotation choices, got " +
                                          std::to_string(choices->size()));
  }
  std::vector<PmOneInstruction> out;
  out.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::int64_t tb = to_int64(rs[i] + 1);
    std::int64_t rot = tb + 1;  // -m
    if (choices) {
      rot = (*choices)[i];
      if (!rotation_allowed(tb, rot)) {
        throw Error(ErrorKind::BadChoice, "rotation " + std::to_string(rot) + " not realizable with tb " +
                                              std::to_string(tb) + " at level " + std::to_string(first_level + i));
      }
    }
    out.push_back(make_instruction(parent, -1, first_level + i, tb, rot, Provenance::RationalChain));
  }
  return out;
}

ConversionCertificate chain_certificate(const Rational& coefficient, const Rational& target, const Integer& k) {
  const NegCF cf = neg_cf_expand(target);
  const auto rs = cf.surgery_coefficients();
  ConversionCertificate cert{
      coefficient, target, cf.entries(), chain_matrix(rs), boundary_slope(rs), k, tight_count(rs), std::nullopt, {}};
  if (k != 0) {
    IntMat2 oriented = cert.product;
    if (oriented(0, 0) < 0) oriented = (-oriented).eval();
    cert.composite = (twist_matrix(k) * oriented).eval();
  }
  return cert;
}

void record_clauses(const std::string& parent, ConversionResult& result) {
  ChainConversion chain{parent, result.certificate.coefficient, result.instructions, result.certificate};
  result.certificate.identity_check = derive_clauses(chain);
}

}  // namespace

ConversionResult convert_negative(const std::string& parent, const Rational& r,
                                  const std::optional<std::vector<std::int64_t>>& choices) {
  if (r.is_infinite() || r.sign() >= 0) {
    throw Error(ErrorKind::NonNegativeCoefficient, "negative conversion of " + r.str());
  }
  ConversionResult result{{}, chain_certificate(r, r, 0)};
  result.instructions = negative_chain(parent, NegCF(result.certificate.cf).surgery_coefficients(), 0, choices);
  record_clauses(parent, result);
  return result;
}

Integer minimal_twist(const Rational& r) {
  if (r.is_infinite() || r.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveCoefficient, "positive conversion of " + r.str());
  }
  // q - kp < 0  <=>  k > q/p; q - kp = 0 is excluded automatically.
  return r.den() / r.num() + 1;
}

ConversionResult convert_positive(const std::string& parent, const Rational& r,
                                  const std::optional<std::vector<std::int64_t>>& choices) {
  const Integer k = minimal_twist(r);
  const Rational target(r.num(), r.den() - k * r.num());
  ConversionResult result{{}, chain_certificate(r, target, k)};
  const auto push_offs = static_cast<std::size_t>(to_int64(k));
  for (std::size_t i = 0; i < push_offs; ++i) {
    result.instructions.push_back(make_instruction(parent, +1, i, -1, 0, Provenance::PushOff));
  }
  auto chain = negative_chain(parent, NegCF(result.certificate.cf).surgery_coefficients(), push_offs, choices);
  result.instructions.insert(result.instructions.end(), chain.begin(), chain.end());
  record_clauses(parent, result);
  return result;
}

std::vector<PmOneInstruction> convert_zero(const std::string& parent) {
  return {make_instruction(parent, +1, 0, -1, 0, Provenance::ZeroSurgery)};
}

std::vector<PmOneInstruction> lutz_simple(const std::string& parent) {
  return {make_instruction(parent, +1, 0, -1, 0, Provenance::SimpleLutz),
          make_instruction(parent, +1, 1, -1, 0, Provenance::SimpleLutz)};
}

std::vector<PmOneInstruction> lutz_full(const std::string& parent) {
  // Two (+1)-surgeries reduce the full twist to a simple one.
  std::vector<PmOneInstruction> out = {make_instruction(parent, +1, 0, -1, 0, Provenance::FullLutz),
                                       make_instruction(parent, +1, 1, -1, 0, Provenance::FullLutz)};
  for (auto ins : lutz_simple(parent)) {
    ins.level += 2;
    ins.provenance = Provenance::FullLutz;
    out.push_back(ins);
  }
  return out;
}

namespace {

// Rotation choices for one component under the policy. `cursor` walks the
// tuple across components.
std::optional<std::vector<std::int64_t>> choices_for(const std::vector<Integer>& rs,
                                                     const StabilizationPolicy& policy, std::size_t& cursor) {
  std::vector<std::int64_t> out;
  for (const auto& r : rs) {
    const std::int64_t tb = to_int64(r + 1);
    switch (policy.kind) {
      case StabilizationPolicy::Kind::AllNegative: out.push_back(tb + 1); break;
      case StabilizationPolicy::Kind::AllPositive: out.push_back(-tb - 1); break;
      case StabilizationPolicy::Kind::Tuple:
        if (cursor >= policy.tuple.size()) {
          throw Error(ErrorKind::BadChoice, "policy tuple too short (" + std::to_string(policy.tuple.size()) + ")");
        }
        out.push_back(policy.tuple[cursor++]);
        break;
    }
  }
  return out;
}

std::vector<Integer> chain_coefficients(const Rational& r) {
  if (r.sign() < 0) return neg_cf_expand(r).surgery_coefficients();
  return neg_cf_expand(Rational(r.num(), r.den() - minimal_twist(r) * r.num())).surgery_coefficients();
}

bool is_unit(const Rational& r) { return r == Rational(1) || r == Rational(-1); }

}  // namespace

PmOneDiagram convert(const ContactDiagram& diagram, const StabilizationPolicy& policy) {
  validate_diagram(diagram);
  PmOneDiagram out;
  out.policy = policy.str();
  std::vector<std::pair<std::string, std::string>> failures;
  std::optional<ErrorKind> first_kind;
  std::size_t cursor = 0;

  for (const auto& c : diagram.components) {
    const Rational& r = c.coefficient;
    try {
      if (r.is_infinite()) {
        out.dropped.push_back(c.id);
        continue;
      }
      ChainConversion chain{c.id, r, {}, std::nullopt};
      if (r.sign() == 0) {
        chain.instructions = convert_zero(c.id);
      } else if (is_unit(r)) {
        chain.instructions = {make_instruction(c.id, r.sign(), 0, -1, 0, Provenance::Passthrough)};
      } else {
        const auto choices = choices_for(chain_coefficients(r), policy, cursor);
        ConversionResult result = r.sign() < 0 ? convert_negative(c.id, r, choices) : convert_positive(c.id, r, choices);
        chain.instructions = std::move(result.instructions);
        chain.certificate = std::move(result.certificate);
      }
      out.chains.push_back(std::move(chain));
    } catch (const Error& e) {
      if (!first_kind) first_kind = e.kind();
      failures.emplace_back(c.id, e.what());
    }
  }
  if (!failures.empty()) {
    std::string message = "conversion failed for";
    for (const auto& [id, what] : failures) message += " [" + id + ": " + what + "]";
    throw ConversionError(*first_kind, message, std::move(failures));
  }
  if (policy.kind == StabilizationPolicy::Kind::Tuple && cursor != policy.tuple.size()) {
    throw Error(ErrorKind::BadChoice, "policy tuple has " + std::to_string(policy.tuple.size()) +
                                          " entries, diagram needs " + std::to_string(cursor));
  }
  return out;
}

Integer conversion_count(const ContactDiagram& diagram) {
  validate_diagram(diagram);
  Integer total = 1;
  for (const auto& c : diagram.components) {
    const Rational& r = c.coefficient;
    if (r.is_infinite() || r.sign() == 0 || is_unit(r)) continue;
    total *= tight_count(chain_coefficients(r));
  }
  return total;
}

std::size_t enumerate_conversions(const ContactDiagram& diagram,
                                  const std::function<bool(const PmOneDiagram&)>& visit) {
  PmOneDiagram base = convert(diagram);

  struct Slot {
    std::size_t chain;
    std::size_t instruction;
    std::vector<std::int64_t> allowed;
  };
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < base.chains.size(); ++c) {
    const auto& ins = base.chains[c].instructions;
    for (std::size_t i = 0; i < ins.size(); ++i) {
      if (ins[i].provenance == Provenance::RationalChain) slots.push_back({c, i, allowed_rotations(ins[i].tb_local)});
    }
  }

  // Odometer over the slots; the last slot varies fastest.
  std::vector<std::size_t> digit(slots.size(), 0);
  std::size_t visited = 0;
  for (;;) {
    PmOneDiagram current = base;
    std::vector<std::int64_t> tuple;
    tuple.reserve(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const std::int64_t rot = slots[s].allowed[digit[s]];
      current.chains[slots[s].chain].instructions[slots[s].instruction].rot = rot;
      tuple.push_back(rot);
    }
    current.policy = StabilizationPolicy::from_tuple(tuple).str();
    ++visited;
    if (!visit(current)) return visited;

    std::size_t s = slots.size();
    for (;;) {
      if (s == 0) return visited;
      --s;
      if (++digit[s] < slots[s].allowed.size()) break;
      digit[s] = 0;
    }
  }
}

namespace {

bool same_knot(const PmOneInstruction& a, const PmOneInstruction& b) {
  return a.parent == b.parent && a.level == b.level && a.tb_local == b.tb_local && a.rot == b.rot;
}

}  // namespace

std::vector<PmOneInstruction> cancel_pairs(const std::vector<PmOneInstruction>& instructions) {
  std::vector<PmOneInstruction> stack;
  for (const auto& ins : instructions) {
    if (!stack.empty() && same_knot(stack.back(), ins) && stack.back().coefficient == -ins.coefficient) {
      stack.pop_back();
    } else {
      stack.push_back(ins);
    }
  }
  return stack;
}

std::vector<PmOneInstruction> invert_chain(const std::vector<PmOneInstruction>& instructions) {
  std::vector<PmOneInstruction> out(instructions.rbegin(), instructions.rend());
  for (auto& ins : out) ins.coefficient = -ins.coefficient;
  return out;
}

}  // namespace contactsurg
