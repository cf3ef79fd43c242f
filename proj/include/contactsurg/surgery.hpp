#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contactsurg/continued_fraction.hpp"
#include "contactsurg/error.hpp"
#include "contactsurg/front.hpp"
#include "contactsurg/integer.hpp"
#include "contactsurg/rational.hpp"

namespace contactsurg {

// ---------------------------------------------------------------------------
// Diagram model

using KnotSpec = std::variant<FrontWord, LegendrianKnotData>;

struct DiagramComponent {
  std::string id;
  KnotSpec knot;
  Rational coefficient;  // measured against the contact framing
  std::map<std::string, std::int64_t> linking;

  friend bool operator==(const DiagramComponent&, const DiagramComponent&) = default;
};

struct ContactDiagram {
  std::vector<DiagramComponent> components;

  friend bool operator==(const ContactDiagram&, const ContactDiagram&) = default;
};

/// Unique nonempty ids, single-component fronts, realizable knot data and a
/// consistent linking map. Throws InvalidDiagram (or the front/knot error).
void validate_diagram(const ContactDiagram& diagram);

/// tb of a component, read from its front (canonical orientation) or data.
std::int64_t component_tb(const DiagramComponent& component);

/// lk between components i and j from either side's map, if present.
std::optional<std::int64_t> linking_between(const ContactDiagram& diagram, std::size_t i, std::size_t j);

// ---------------------------------------------------------------------------
// Converted presentation

enum class Provenance { Passthrough, RationalChain, PushOff, ZeroSurgery, SimpleLutz, FullLutz };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// One contact (+-1)-surgery. tb_local is measured in the local coordinates
/// of the solid torus the knot sits in at its level of the chain.
struct PmOneInstruction {
  int coefficient = -1;
  std::size_t level = 0;
  std::int64_t tb_local = -1;
  std::int64_t rot = 0;
  std::string parent;
  Provenance provenance = Provenance::RationalChain;

  friend bool operator==(const PmOneInstruction&, const PmOneInstruction&) = default;
};

/// Named certificate clause with its recorded outcome.
struct Clause {
  std::string name;
  bool passed = false;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Certificate attached to a converted component. It is treated as an
/// untrusted record: verify() re-derives every clause from these fields.
struct ConversionCertificate {
  Rational coefficient;  // the input coefficient r
  Rational target;       // negative coefficient realised by the (-1)-chain
  std::vector<Integer> cf;  // entries of the expansion of target
  IntMat2 product;       // chain matrix of cf; first column ~ target
  Rational slope;        // boundary slope of the chain
  Integer k;             // push-off count for r > 0, else 0
  Integer tight_count;
  std::optional<IntMat2> composite;  // (1 0; k 1) * product, r > 0 only
  std::vector<Clause> identity_check;

  friend bool operator==(const ConversionCertificate&, const ConversionCertificate&) = default;
};

struct ChainConversion {
  std::string parent;
  Rational coefficient;
  std::vector<PmOneInstruction> instructions;
  std::optional<ConversionCertificate> certificate;

  friend bool operator==(const ChainConversion&, const ChainConversion&) = default;
};

struct PmOneDiagram {
  std::string policy;
  std::vector<ChainConversion> chains;
  std::vector<std::string> dropped;  // components with coefficient inf

  friend bool operator==(const PmOneDiagram&, const PmOneDiagram&) = default;
};

/// Which rotation number each (-1) chain member receives.
struct StabilizationPolicy {
  enum class Kind { AllNegative, AllPositive, Tuple };
  Kind kind = Kind::AllNegative;
  std::vector<std::int64_t> tuple;

  static StabilizationPolicy all_negative() { return {}; }
  static StabilizationPolicy all_positive() { return {Kind::AllPositive, {}}; }
  static StabilizationPolicy from_tuple(std::vector<std::int64_t> values) { return {Kind::Tuple, std::move(values)}; }

  /// "all-negative", "all-positive" or "tuple=a,b,...". Throws ParseError.
  static StabilizationPolicy parse(std::string_view text);
  std::string str() const;
};

/// {-m, -m+2, ..., m} with m = |tb| - 1: rotation numbers reachable by
/// stabilizing the standard unknot down to the given tb.
std::vector<std::int64_t> allowed_rotations(std::int64_t tb);
bool rotation_allowed(std::int64_t tb, std::int64_t rot);

struct ConversionResult {
  std::vector<PmOneInstruction> instructions;
  ConversionCertificate certificate;
};

/// Contact r-surgery, r < 0, as a chain of (-1)-surgeries, one per entry of
/// the canonical expansion. `choices` overrides the all-negative rotation
/// numbers. Throws NonNegativeCoefficient or BadChoice.
ConversionResult convert_negative(const std::string& parent, const Rational& r,
                                  const std::optional<std::vector<std::int64_t>>& choices = std::nullopt);

/// Contact r-surgery, r = p/q > 0: k (+1)-surgeries on push-offs with k
/// minimal such that q - kp < 0, then the chain for p/(q - kp).
/// Throws NonPositiveCoefficient or BadChoice.
ConversionResult convert_positive(const std::string& parent, const Rational& r,
                                  const std::optional<std::vector<std::int64_t>>& choices = std::nullopt);

/// Minimal k >= 1 with q - kp < 0 for r = p/q > 0.
Integer minimal_twist(const Rational& r);

/// Contact 0-surgery rewritten as one (+1)-surgery.
std::vector<PmOneInstruction> convert_zero(const std::string& parent);

std::vector<PmOneInstruction> lutz_simple(const std::string& parent);
std::vector<PmOneInstruction> lutz_full(const std::string& parent);

/// Per-component dispatch: inf dropped, 0 rewritten, +-1 kept, r < 0 and
/// r > 0 converted with certificates. Throws ConversionError listing every
/// failing component.
PmOneDiagram convert(const ContactDiagram& diagram,
                     const StabilizationPolicy& policy = StabilizationPolicy::all_negative());

/// Number of diagrams enumerate_conversions yields.
Integer conversion_count(const ContactDiagram& diagram);

/// Visits every stabilization choice in lexicographic order of the flattened
/// rotation tuple (component order, then level order). The visitor returns
/// false to stop early. Returns the number of diagrams visited.
std::size_t enumerate_conversions(const ContactDiagram& diagram,
                                  const std::function<bool(const PmOneDiagram&)>& visit);

/// Removes adjacent (+1)/(-1) pairs on the same knot at the same level,
/// repeatedly, so the result has no such pair left.
std::vector<PmOneInstruction> cancel_pairs(const std::vector<PmOneInstruction>& instructions);

/// Inverse sequence: reversed order, every coefficient negated.
std::vector<PmOneInstruction> invert_chain(const std::vector<PmOneInstruction>& instructions);

class ConversionError : public Error {
 public:
  ConversionError(ErrorKind kind, const std::string& message,
                  std::vector<std::pair<std::string, std::string>> failures)
      : Error(kind, message), failures_(std::move(failures)) {}

  const std::vector<std::pair<std::string, std::string>>& failures() const { return failures_; }

 private:
  std::vector<std::pair<std::string, std::string>> failures_;
};

// ---------------------------------------------------------------------------
// Verification

struct ClauseResult {
  std::string parent;
  std::string clause;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<ClauseResult> clauses;

  bool passed() const;
  std::size_t failures() const;
};

/// Clauses re-derived from a certificate alone (no recorded outcomes).
std::vector<Clause> derive_clauses(const ChainConversion& chain);

/// Re-derives every certificate clause from scratch and compares it with
/// the recorded table. Failures are entries, never exceptions.
VerifyReport verify(const PmOneDiagram& diagram);

}  // namespace contactsurg
