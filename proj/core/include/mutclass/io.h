#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mutclass/diagram.h"
#include "mutclass/hosts.h"
#include "mutclass/verify.h"

namespace mutclass {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  // line is 1-based, 0 when the problem is tied to a field instead.
  ParseError(const std::string& message, int line, std::string field);

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Diagram diagram, std::vector<Violation> violations);

  const Diagram& diagram() const { return diagram_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  Diagram diagram_;
  std::vector<Violation> violations_;
};

// Document layout:
//   {"format_version": 1,
//    "vertices": [{"id": "0", "label": "x1"}, ...],
//    "edges": [{"tail": "0", "head": "1", "weight": 4, "display": "double"}, ...]}
// Unknown keys are rejected. "display" is optional and only allowed on weight-4 edges.
Diagram parse_document(std::string_view text);
// Structural parse only; malformed edges stay in structural_defects().
Diagram parse_document_unvalidated(std::string_view text);

// Vertices in natural id order ("2" before "10"), edges by (tail, head) in
// that order, two-space indent, trailing newline.
std::string serialize_document(const Diagram& d);

// Host truncation as a document; labels carry the role names.
std::string serialize_host(const HostGraph& host);

// Weight above one becomes the edge label; weight 4 is drawn as a double arrow.
std::string to_dot(const Diagram& d);

std::string report_to_json(const VerificationReport& report);

// Natural order on vertex ids: digit runs compare numerically.
bool id_less(std::string_view a, std::string_view b);

}  // namespace mutclass
