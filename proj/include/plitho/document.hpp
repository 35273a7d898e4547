#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plitho/ops.hpp"

namespace plitho {

// Raised when a document cannot be parsed or breaks the format's rules; the
// message lists every violation found.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// On-disk unit: named schemas plus labeled subjects whose degree vectors
// reference a schema by name.
struct Document {
  struct Subject {
    std::string label;
    std::string schema_name;
    Evaluation evaluation;
  };

  int version = 1;
  std::vector<MultiAttributeSchema> schemas;
  std::vector<Subject> subjects;

  const MultiAttributeSchema* find_schema(const std::string& name) const;
  const Subject* find_subject(const std::string& label) const;
};

// Parse and fully validate: version tag, unique names and labels, schema
// well-formedness, subject-to-schema references, degree counts and ranges.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

// Canonical form: fixed key order, two-space indent, numbers at full
// round-trip precision, trailing newline. Loading and saving a canonical file
// reproduces it byte for byte.
std::string serialize_document(const Document& doc);
void save_document(const Document& doc, const std::string& path);

}  // namespace plitho
