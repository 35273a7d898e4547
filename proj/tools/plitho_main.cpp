#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plitho/document.hpp"
#include "plitho/measures.hpp"
#include "plitho/numbers.hpp"
#include "plitho/ops.hpp"

namespace {

using plitho::Degree;
using plitho::Evaluation;

// Shortest decimal form that parses back to the same double; used everywhere
// machine-readable output wants full precision.
std::string fmt_full(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_fixed2(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string human_cell(const Degree& d) {
  switch (d.kind()) {
    case plitho::DegreeKind::Fuzzy:
      return fmt_fixed2(d.t());
    case plitho::DegreeKind::Intuitionistic:
      return "(" + fmt_fixed2(d.t()) + ", " + fmt_fixed2(d.f()) + ")";
    case plitho::DegreeKind::Neutrosophic:
      return "(" + fmt_fixed2(d.t()) + ", " + fmt_fixed2(d.i()) + ", " +
             fmt_fixed2(d.f()) + ")";
  }
  return "?";
}

struct TaggedEval {
  std::string tag;
  const Evaluation* eval;
};

// One tab-separated line per value and operand:
// tag, attribute, value, contradiction, degree components.
void print_rows(std::ostream& os, const std::vector<TaggedEval>& cols) {
  for (const auto& col : cols) {
    const Evaluation& e = *col.eval;
    for (std::size_t i = 0; i < e.size(); ++i) {
      os << col.tag << '\t' << e.schema().attribute_name(i) << '\t'
         << e.schema().value_label(i) << '\t' << fmt_full(e.contradiction_at(i));
      const Degree& d = e.degrees()[i];
      for (std::size_t c = 0; c < plitho::component_count(d.kind()); ++c)
        os << '\t' << fmt_full(d.component(c));
      os << '\n';
    }
  }
}

// Aligned table, two decimals, one column per operand. All operands must
// share a schema.
void print_human(std::ostream& os, const std::vector<TaggedEval>& cols) {
  const auto& schema = cols.front().eval->schema();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"attribute", "value", "c"};
  for (const auto& col : cols) header.push_back(col.tag);
  grid.push_back(std::move(header));
  for (std::size_t i = 0; i < cols.front().eval->size(); ++i) {
    std::vector<std::string> row = {schema.attribute_name(i),
                                    schema.value_label(i),
                                    fmt_fixed2(schema.contradiction_at(i))};
    for (const auto& col : cols)
      row.push_back(human_cell(col.eval->degrees()[i]));
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(widths[c] - row[c].size(), ' ');
    }
    os << line << '\n';
  }
}

void print_tagged(const std::string& format,
                  const std::vector<TaggedEval>& cols) {
  if (format == "rows")
    print_rows(std::cout, cols);
  else
    print_human(std::cout, cols);
}

const Evaluation& subject_eval(const plitho::Document& doc,
                               const std::string& label) {
  const auto* s = doc.find_subject(label);
  if (!s) throw plitho::DocumentError("no subject labeled '" + label + "'");
  return s->evaluation;
}

std::vector<double> parse_csv(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw plitho::DocumentError(std::string(what) + ": '" + item +
                                  "' is not a number");
    }
    while (pos < item.size() &&
           std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw plitho::DocumentError(std::string(what) + ": '" + item +
                                  "' is not a number");
    out.push_back(v);
  }
  if (out.empty())
    throw plitho::DocumentError(std::string(what) + ": empty list");
  return out;
}

// Every degree component of every value, in schema order.
std::vector<double> flatten(const Evaluation& e) {
  std::vector<double> out;
  for (const Degree& d : e.degrees())
    for (std::size_t c = 0; c < plitho::component_count(d.kind()); ++c)
      out.push_back(d.component(c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plithogenic set, logic and probability calculator"};
  app.require_subcommand(1);

  struct {
    std::string doc;
    std::string first, second, subject;
    plitho::NormPair norms{};
    plitho::OrderStyle style = plitho::OrderStyle::Simple;
    plitho::NegationForm form = plitho::NegationForm::AntiValue;
    plitho::ComplementVariant variant = plitho::ComplementVariant::Swap;
    std::string measure;
    bool similarity = false;
    std::string op, csv_a, csv_b, csv_c;
    double lambda = 1.0;
    bool lambda_set = false;
    std::string format = "human";
  } opt;

  const std::map<std::string, plitho::Norm> norm_names{
      {"product", plitho::Norm::Product}, {"minmax", plitho::Norm::MinMax}};
  const std::map<std::string, plitho::OrderStyle> style_names{
      {"simple", plitho::OrderStyle::Simple},
      {"plithogenic", plitho::OrderStyle::Plithogenic}};
  const std::map<std::string, plitho::NegationForm> form_names{
      {"anti", plitho::NegationForm::AntiValue},
      {"reverse", plitho::NegationForm::Reverse},
      {"complement", plitho::NegationForm::DegreeComplement}};
  const std::map<std::string, plitho::ComplementVariant> variant_names{
      {"swap", plitho::ComplementVariant::Swap},
      {"swap-flip-i", plitho::ComplementVariant::SwapFlipIndeterminacy},
      {"flip", plitho::ComplementVariant::Flip}};

  auto add_doc = [&](CLI::App* sub) {
    sub->add_option("doc", opt.doc, "document to read")->required();
  };
  auto add_pair = [&](CLI::App* sub) {
    add_doc(sub);
    sub->add_option("-a,--first", opt.first, "left subject label")->required();
    sub->add_option("-b,--second", opt.second, "right subject label")
        ->required();
  };
  auto add_norm = [&](CLI::App* sub) {
    sub->add_option("--norm", opt.norms.id, "t-norm/t-conorm pair")
        ->transform(CLI::CheckedTransformer(norm_names, CLI::ignore_case));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "human or rows")
        ->check(CLI::IsMember({"human", "rows"}));
  };

  auto* validate_cmd =
      app.add_subcommand("validate", "check a document and report violations");
  add_doc(validate_cmd);
  validate_cmd->callback([&] { plitho::load_document(opt.doc); });

  auto combine_callback = [&](bool conjunction) {
    return [&opt, conjunction] {
      const auto doc = plitho::load_document(opt.doc);
      const auto& a = subject_eval(doc, opt.first);
      const auto& b = subject_eval(doc, opt.second);
      const Evaluation r = conjunction ? p_and(a, b, opt.norms)
                                       : p_or(a, b, opt.norms);
      const std::string op_name = conjunction ? "and" : "or";
      print_tagged(opt.format,
                   {{op_name + "(" + opt.first + "," + opt.second + ")", &r}});
    };
  };

  auto* and_cmd = app.add_subcommand("and", "conjunction of two subjects");
  add_pair(and_cmd);
  add_norm(and_cmd);
  add_format(and_cmd);
  and_cmd->callback(combine_callback(true));

  auto* or_cmd = app.add_subcommand("or", "disjunction of two subjects");
  add_pair(or_cmd);
  add_norm(or_cmd);
  add_format(or_cmd);
  or_cmd->callback(combine_callback(false));

  auto* not_cmd = app.add_subcommand("not", "negation of a subject");
  add_doc(not_cmd);
  not_cmd->add_option("-s,--subject", opt.subject, "subject label")
      ->required();
  not_cmd->add_option("--form", opt.form, "anti, reverse or complement")
      ->transform(CLI::CheckedTransformer(form_names, CLI::ignore_case));
  not_cmd
      ->add_option("--variant", opt.variant,
                   "complement variant: swap, swap-flip-i or flip")
      ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case));
  add_format(not_cmd);
  not_cmd->callback([&] {
    const auto doc = plitho::load_document(opt.doc);
    const Evaluation r =
        p_not(subject_eval(doc, opt.subject), opt.form, opt.variant);
    print_tagged(opt.format, {{"not(" + opt.subject + ")", &r}});
  });

  auto order_callback = [&](bool equality) {
    return [&opt, equality] {
      const auto doc = plitho::load_document(opt.doc);
      const auto& a = subject_eval(doc, opt.first);
      const auto& b = subject_eval(doc, opt.second);
      const bool r = equality ? p_eq(a, b, opt.style)
                              : p_leq(a, b, opt.style);
      std::cout << (r ? "true" : "false") << '\n';
    };
  };

  auto* leq_cmd =
      app.add_subcommand("leq", "is the first subject included in the second");
  add_pair(leq_cmd);
  leq_cmd->add_option("--style", opt.style, "simple or plithogenic")
      ->transform(CLI::CheckedTransformer(style_names, CLI::ignore_case));
  leq_cmd->callback(order_callback(false));

  auto* eq_cmd = app.add_subcommand("eq", "mutual inclusion of two subjects");
  add_pair(eq_cmd);
  eq_cmd->add_option("--style", opt.style, "simple or plithogenic")
      ->transform(CLI::CheckedTransformer(style_names, CLI::ignore_case));
  eq_cmd->callback(order_callback(true));

  auto* dist_cmd =
      app.add_subcommand("distance", "similarity or distance of two subjects");
  add_pair(dist_cmd);
  dist_cmd
      ->add_option("--measure", opt.measure,
                   "dice, cosine, jaccard, hamming or euclidean")
      ->required()
      ->check(CLI::IsMember(
          {"dice", "cosine", "jaccard", "hamming", "euclidean"}));
  dist_cmd->add_flag("--similarity", opt.similarity,
                     "report 1 - distance for hamming and euclidean");
  add_format(dist_cmd);
  dist_cmd->callback([&] {
    const auto doc = plitho::load_document(opt.doc);
    const auto va = flatten(subject_eval(doc, opt.first));
    const auto vb = flatten(subject_eval(doc, opt.second));
    double v = 0.0;
    std::string name = opt.measure;
    if (opt.measure == "dice") {
      v = plitho::dice_similarity(va, vb);
      name += "-similarity";
    } else if (opt.measure == "cosine") {
      v = plitho::cosine_similarity(va, vb);
      name += "-similarity";
    } else if (opt.measure == "jaccard") {
      v = plitho::jaccard_similarity(va, vb);
      name += "-similarity";
    } else if (opt.measure == "hamming") {
      v = opt.similarity ? plitho::hamming_similarity(va, vb)
                         : plitho::hamming_distance(va, vb);
      name += opt.similarity ? "-similarity" : "-distance";
    } else {
      v = opt.similarity ? plitho::euclidean_similarity(va, vb)
                         : plitho::euclidean_distance(va, vb);
      name += opt.similarity ? "-similarity" : "-distance";
    }
    if (opt.format == "rows")
      std::cout << name << '\t' << fmt_full(v) << '\n';
    else
      std::cout << name << " = " << fmt_fixed2(v) << '\n';
  });

  auto* num_cmd =
      app.add_subcommand("number", "arithmetic on plithogenic numbers");
  num_cmd->add_option("--op", opt.op, "add, mul, scale or pow")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "scale", "pow"}));
  num_cmd->add_option("-a,--first", opt.csv_a, "components, comma separated")
      ->required();
  num_cmd->add_option("-b,--second", opt.csv_b,
                      "right operand for add and mul");
  num_cmd
      ->add_option("--contradictions", opt.csv_c,
                   "contradiction degrees, comma separated")
      ->required();
  num_cmd->add_option("--lambda", opt.lambda, "exponent for scale and pow")
      ->each([&](const std::string&) { opt.lambda_set = true; });
  add_format(num_cmd);
  num_cmd->callback([&] {
    const bool binary = opt.op == "add" || opt.op == "mul";
    if (binary && opt.csv_b.empty())
      throw CLI::RequiredError("--second (with --op " + opt.op + ")");
    if (!binary && !opt.lambda_set)
      throw CLI::RequiredError("--lambda (with --op " + opt.op + ")");
    const auto c = parse_csv(opt.csv_c, "--contradictions");
    const plitho::PlithogenicNumber a(parse_csv(opt.csv_a, "--first"), c);
    plitho::PlithogenicNumber r = a;
    if (binary) {
      const plitho::PlithogenicNumber b(parse_csv(opt.csv_b, "--second"), c);
      r = opt.op == "add" ? pn_add(a, b) : pn_mul(a, b);
    } else {
      r = opt.op == "scale" ? pn_scale(opt.lambda, a) : pn_pow(a, opt.lambda);
    }
    if (opt.format == "rows") {
      for (std::size_t i = 0; i < r.size(); ++i)
        std::cout << "result\t" << i << '\t' << fmt_full(r.contradictions()[i])
                  << '\t' << fmt_full(r.degrees()[i]) << '\n';
    } else {
      std::string line = "(";
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) line += ", ";
        line += fmt_fixed2(r.degrees()[i]);
      }
      std::cout << line << ")\n";
    }
  });

  auto* table_cmd = app.add_subcommand(
      "table", "both subjects with their conjunction and disjunction");
  add_pair(table_cmd);
  add_norm(table_cmd);
  add_format(table_cmd);
  table_cmd->callback([&] {
    const auto doc = plitho::load_document(opt.doc);
    const auto& a = subject_eval(doc, opt.first);
    const auto& b = subject_eval(doc, opt.second);
    const Evaluation meet = p_and(a, b, opt.norms);
    const Evaluation join = p_or(a, b, opt.norms);
    print_tagged(opt.format,
                 {{opt.first, &a},
                  {opt.second, &b},
                  {"and(" + opt.first + "," + opt.second + ")", &meet},
                  {"or(" + opt.first + "," + opt.second + ")", &join}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
