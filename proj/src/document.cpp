#include "plitho/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace plitho {
namespace {

using nlohmann::ordered_json;

constexpr double kSumSlack = 1e-12;

struct PendingSubject {
  std::string label;
  std::string schema_name;
  DegreeKind kind = DegreeKind::Fuzzy;
  std::vector<std::vector<double>> rows;
};

const char* kind_name(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::Fuzzy: return "fuzzy";
    case DegreeKind::Intuitionistic: return "intuitionistic";
    case DegreeKind::Neutrosophic: return "neutrosophic";
  }
  return "?";
}

bool kind_from_name(const std::string& name, DegreeKind& out) {
  for (DegreeKind k : {DegreeKind::Fuzzy, DegreeKind::Intuitionistic,
                       DegreeKind::Neutrosophic}) {
    if (name == kind_name(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

class Collector {
public:
  void add(std::string where, std::string what) {
    messages_.push_back(std::move(where) + ": " + std::move(what));
  }
  bool clean() const { return messages_.empty(); }
  [[noreturn]] void raise() const {
    std::string out = "document invalid:";
    for (const auto& m : messages_) out += "\n  - " + m;
    throw DocumentError(out);
  }
  std::vector<std::string> messages_;
};

// Returns false (and reports) unless j[key] exists with the wanted JSON type.
template <typename Pred>
bool expect(const ordered_json& j, const char* key, Pred pred,
            const char* type_name, const std::string& where, Collector& out) {
  if (!j.contains(key)) {
    out.add(where, std::string("missing '") + key + "'");
    return false;
  }
  if (!pred(j.at(key))) {
    out.add(where, std::string("'") + key + "' must be " + type_name);
    return false;
  }
  return true;
}

bool is_string(const ordered_json& j) { return j.is_string(); }
bool is_array(const ordered_json& j) { return j.is_array(); }

AttributeSchema parse_attribute(const ordered_json& j,
                                const std::string& where, Collector& out) {
  AttributeSchema attr;
  if (expect(j, "name", is_string, "a string", where, out))
    attr.name = j.at("name").get<std::string>();
  if (expect(j, "values", is_array, "an array", where, out)) {
    for (const auto& v : j.at("values")) {
      if (!v.is_string()) {
        out.add(where, "'values' entries must be strings");
        break;
      }
      attr.values.push_back(v.get<std::string>());
    }
  }
  if (expect(j, "dominant", is_string, "a string", where, out)) {
    const auto dominant = j.at("dominant").get<std::string>();
    const auto it =
        std::find(attr.values.begin(), attr.values.end(), dominant);
    if (it == attr.values.end())
      out.add(where, "dominant '" + dominant + "' is not among the values");
    else
      attr.dominant_index =
          static_cast<std::size_t>(it - attr.values.begin());
  }
  if (expect(j, "contradictions", is_array, "an array", where, out)) {
    for (const auto& v : j.at("contradictions")) {
      if (!v.is_number()) {
        out.add(where, "'contradictions' entries must be numbers");
        break;
      }
      attr.contradictions.push_back(v.get<double>());
    }
  }
  return attr;
}

PendingSubject parse_subject(const ordered_json& j, const std::string& where,
                             Collector& out) {
  PendingSubject s;
  if (expect(j, "label", is_string, "a string", where, out))
    s.label = j.at("label").get<std::string>();
  if (expect(j, "schema", is_string, "a string", where, out))
    s.schema_name = j.at("schema").get<std::string>();
  if (expect(j, "kind", is_string, "a string", where, out)) {
    const auto name = j.at("kind").get<std::string>();
    if (!kind_from_name(name, s.kind))
      out.add(where, "unknown kind '" + name +
                         "' (expected fuzzy, intuitionistic or neutrosophic)");
  }
  if (expect(j, "degrees", is_array, "an array", where, out)) {
    for (const auto& row : j.at("degrees")) {
      if (!row.is_array()) {
        out.add(where, "'degrees' entries must be arrays");
        break;
      }
      std::vector<double> r;
      bool ok = true;
      for (const auto& v : row) {
        if (!v.is_number()) {
          out.add(where, "degree components must be numbers");
          ok = false;
          break;
        }
        r.push_back(v.get<double>());
      }
      if (!ok) break;
      s.rows.push_back(std::move(r));
    }
  }
  return s;
}

void check_subject_degrees(const PendingSubject& s,
                           const MultiAttributeSchema& schema, Collector& out) {
  const std::string where = "subject '" + s.label + "'";
  if (s.rows.size() != schema.value_count()) {
    out.add(where, "has " + std::to_string(s.rows.size()) +
                       " degrees for a schema with " +
                       std::to_string(schema.value_count()) + " values");
    return;
  }
  const std::size_t want = component_count(s.kind);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto& r = s.rows[i];
    const std::string at = where + ", degree " + std::to_string(i);
    if (r.size() != want) {
      out.add(at, "needs " + std::to_string(want) + " components for a " +
                      kind_name(s.kind) + " degree");
      continue;
    }
    for (double v : r)
      if (!(v >= 0.0 && v <= 1.0)) {
        out.add(at, "component outside [0, 1]");
        break;
      }
    if (s.kind == DegreeKind::Intuitionistic && r[0] + r[1] > 1.0 + kSumSlack)
      out.add(at, "truth plus falsehood exceeds 1");
  }
}

Evaluation build_evaluation(const PendingSubject& s,
                            const MultiAttributeSchema& schema) {
  std::vector<Degree> degrees;
  degrees.reserve(s.rows.size());
  for (const auto& r : s.rows) {
    switch (s.kind) {
      case DegreeKind::Fuzzy:
        degrees.push_back(Degree::fuzzy(r[0]));
        break;
      case DegreeKind::Intuitionistic:
        degrees.push_back(Degree::intuitionistic(r[0], r[1]));
        break;
      case DegreeKind::Neutrosophic:
        degrees.push_back(Degree::neutrosophic(r[0], r[1], r[2]));
        break;
    }
  }
  return Evaluation(schema, std::move(degrees));
}

}  // namespace

const MultiAttributeSchema* Document::find_schema(
    const std::string& name) const {
  for (const auto& s : schemas)
    if (s.name == name) return &s;
  return nullptr;
}

const Document::Subject* Document::find_subject(
    const std::string& label) const {
  for (const auto& s : subjects)
    if (s.label == label) return &s;
  return nullptr;
}

Document parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }

  Collector out;
  if (!j.is_object()) {
    out.add("document", "top level must be an object");
    out.raise();
  }
  if (expect(j, "version",
             [](const ordered_json& v) { return v.is_number_integer(); },
             "an integer", "document", out) &&
      j.at("version").get<int>() != 1)
    out.add("document",
            "unsupported version " + std::to_string(j.at("version").get<int>()));

  Document doc;
  std::vector<PendingSubject> pending;

  if (expect(j, "schemas", is_array, "an array", "document", out)) {
    std::size_t idx = 0;
    for (const auto& js : j.at("schemas")) {
      const std::string where = "schemas[" + std::to_string(idx++) + "]";
      MultiAttributeSchema schema;
      if (!js.is_object()) {
        out.add(where, "must be an object");
        continue;
      }
      if (expect(js, "name", is_string, "a string", where, out))
        schema.name = js.at("name").get<std::string>();
      if (expect(js, "attributes", is_array, "an array", where, out)) {
        std::size_t a = 0;
        for (const auto& ja : js.at("attributes")) {
          const std::string attr_where =
              where + ".attributes[" + std::to_string(a++) + "]";
          if (!ja.is_object()) {
            out.add(attr_where, "must be an object");
            continue;
          }
          schema.components.push_back(parse_attribute(ja, attr_where, out));
        }
      }
      for (auto& msg : validate(schema)) out.add(where, msg);
      if (doc.find_schema(schema.name))
        out.add(where, "duplicate schema name '" + schema.name + "'");
      doc.schemas.push_back(std::move(schema));
    }
  }

  if (expect(j, "subjects", is_array, "an array", "document", out)) {
    std::size_t idx = 0;
    std::unordered_set<std::string> labels;
    for (const auto& js : j.at("subjects")) {
      const std::string where = "subjects[" + std::to_string(idx++) + "]";
      if (!js.is_object()) {
        out.add(where, "must be an object");
        continue;
      }
      PendingSubject s = parse_subject(js, where, out);
      if (!labels.insert(s.label).second)
        out.add(where, "duplicate subject label '" + s.label + "'");
      const MultiAttributeSchema* schema = doc.find_schema(s.schema_name);
      if (!schema) {
        out.add(where, "references unknown schema '" + s.schema_name + "'");
        continue;
      }
      check_subject_degrees(s, *schema, out);
      pending.push_back(std::move(s));
    }
  }

  if (!out.clean()) out.raise();

  for (auto& s : pending) {
    const MultiAttributeSchema* schema = doc.find_schema(s.schema_name);
    doc.subjects.push_back(
        {s.label, s.schema_name, build_evaluation(s, *schema)});
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const Document& doc) {
  ordered_json j;
  j["version"] = doc.version;
  j["schemas"] = ordered_json::array();
  for (const auto& schema : doc.schemas) {
    ordered_json js;
    js["name"] = schema.name;
    js["attributes"] = ordered_json::array();
    for (const auto& attr : schema.components) {
      ordered_json ja;
      ja["name"] = attr.name;
      ja["values"] = attr.values;
      ja["dominant"] = attr.values.at(attr.dominant_index);
      ja["contradictions"] = attr.contradictions;
      js["attributes"].push_back(std::move(ja));
    }
    j["schemas"].push_back(std::move(js));
  }
  j["subjects"] = ordered_json::array();
  for (const auto& subject : doc.subjects) {
    ordered_json js;
    js["label"] = subject.label;
    js["schema"] = subject.schema_name;
    js["kind"] = kind_name(subject.evaluation.kind());
    ordered_json rows = ordered_json::array();
    for (const Degree& d : subject.evaluation.degrees()) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < component_count(d.kind()); ++c)
        row.push_back(d.component(c));
      rows.push_back(std::move(row));
    }
    js["degrees"] = std::move(rows);
    j["subjects"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

void save_document(const Document& doc, const std::string& path) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw DocumentError("cannot open '" + path + "' for writing");
  outf << serialize_document(doc);
  if (!outf) throw DocumentError("failed writing '" + path + "'");
}

}  // namespace plitho
