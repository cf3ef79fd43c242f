#include "contactsurg/error.hpp"

namespace contactsurg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonNegativeCoefficient: return "NonNegativeCoefficient";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::InfiniteCoefficient: return "InfiniteCoefficient";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadEntry: return "BadEntry";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnbalancedCusps: return "UnbalancedCusps";
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::SameComponent: return "SameComponent";
    case ErrorKind::UnrealizablePair: return "UnrealizablePair";
    case ErrorKind::BadChoice: return "BadChoice";
    case ErrorKind::MissingLinkingData: return "MissingLinkingData";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace contactsurg
