#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contactsurg/surgery.hpp"

namespace contactsurg {

inline constexpr std::string_view kDiagramVersion = "contactsurg-diagram/1";
inline constexpr std::string_view kResultVersion = "contactsurg-pm1/1";

struct DiagramOptions {
  std::optional<std::string> policy;
  std::optional<bool> enumerate;

  friend bool operator==(const DiagramOptions&, const DiagramOptions&) = default;
};

struct DiagramFile {
  ContactDiagram diagram;
  std::optional<DiagramOptions> options;

  friend bool operator==(const DiagramFile&, const DiagramFile&) = default;
};

/// Parses and validates a diagram file. Syntax errors report line and
/// column; schema errors report the JSON pointer of the offending value.
/// Throws ParseError, or the diagram validation error.
DiagramFile parse_diagram_file(std::string_view text);
std::string dump_diagram_file(const DiagramFile& file);

/// Result files hold one converted diagram. Compact form is one line.
PmOneDiagram parse_result(std::string_view text);
std::string dump_result(const PmOneDiagram& diagram, bool compact = false);

/// Version tag of a JSON document, or empty if it has none.
std::string document_version(std::string_view text);

/// Accepts a single result object, a JSON array of them, or one compact
/// object per line.
std::vector<PmOneDiagram> parse_results(std::string_view text);

FrontWord parse_front(std::string_view json_array);
std::string dump_front(const FrontWord& word);

}  // namespace contactsurg
