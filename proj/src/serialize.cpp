#include "unipv/serialize.hpp"

#include <charconv>

#include "unipv/errors.hpp"

namespace unipv {
namespace {

json header(std::string_view kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

void expect_kind(const json& doc, std::string_view kind) {
  if (!doc.is_object()) throw DomainError("document is not an object");
  if (doc.value("schema", "") != kSchema) throw DomainError("unsupported schema, expected " + std::string(kSchema));
  if (doc.value("kind", "") != kind) throw DomainError("expected a " + std::string(kind) + " document");
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

unsigned parse_index(std::string_view s) {
  const std::string t = trim(s);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) throw ParseError("bad index '" + t + "'", 0);
  return v;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

Matrix<RatFunc> parse_matrix(std::string_view text, unsigned max_param) {
  const auto rows = split_top_level(text, ';');
  if (rows.empty()) throw ParseError("empty matrix", 0);
  Matrix<RatFunc> m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = split_top_level(rows[r], ',');
    if (cells.size() != rows.size())
      throw ParseError("matrix row " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) +
                           " entries, expected " + std::to_string(rows.size()),
                       0);
    for (std::size_t c = 0; c < cells.size(); ++c) m(r, c) = parse_expr(cells[c], max_param);
  }
  return m;
}

std::vector<ExtraEntry> parse_extra(std::string_view text, unsigned max_param) {
  std::vector<ExtraEntry> out;
  for (const auto& item : split_top_level(text, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("extra entry '" + item + "' is not 'row,col:value'", 0);
    const auto pos = split_top_level(std::string_view(item).substr(0, colon), ',');
    if (pos.size() != 2) throw ParseError("extra entry '" + item + "' is not 'row,col:value'", 0);
    out.push_back({parse_index(pos[0]), parse_index(pos[1]), parse_expr(item.substr(colon + 1), max_param)});
  }
  return out;
}

json to_json(const PVExtension& ext) {
  json doc = header("extension");
  doc["n"] = ext.n();
  doc["f"] = json::array();
  for (const auto& f : ext.f()) doc["f"].push_back(f.text());
  doc["extra"] = json::array();
  for (const auto& e : ext.extra()) doc["extra"].push_back({{"row", e.row}, {"col", e.col}, {"value", e.value.text()}});
  json table = json::object();
  for (const auto& [v, d] : ext.derivation().table()) table[v.text()] = d.text();
  doc["derivation"] = std::move(table);
  return doc;
}

PVExtension extension_from_json(const json& doc) {
  expect_kind(doc, "extension");
  const auto n = field<unsigned>(doc, "n");
  std::vector<RatFunc> f;
  for (const auto& s : field<std::vector<std::string>>(doc, "f")) f.push_back(parse_expr(s, n));
  std::vector<ExtraEntry> extra;
  if (doc.contains("extra"))
    for (const auto& e : doc.at("extra"))
      extra.push_back({field<unsigned>(e, "row"), field<unsigned>(e, "col"), parse_expr(field<std::string>(e, "value"), n)});
  PVExtension ext = build_extension(n, std::move(f), std::move(extra));
  if (doc.contains("derivation")) {
    const auto stored = field<std::map<std::string, std::string>>(doc, "derivation");
    const auto& table = ext.derivation().table();
    if (stored.size() != table.size()) throw DomainError("derivation table does not match n, f and extra");
    for (const auto& [v, d] : table) {
      auto it = stored.find(v.text());
      if (it == stored.end() || !(parse_expr(it->second, n) == d))
        throw DomainError("derivation table entry for " + v.text() + " does not match n, f and extra");
    }
  }
  return ext;
}

json to_json(const DiffOperator& op) {
  json doc = header("operator");
  doc["order"] = op.order();
  doc["coeffs"] = json::array();
  for (const auto& c : op.coeffs()) doc["coeffs"].push_back(c.text());
  doc["text"] = op.text();
  doc["latex"] = op.latex();
  return doc;
}

DiffOperator operator_from_json(const json& doc, unsigned max_param) {
  expect_kind(doc, "operator");
  const auto order = field<unsigned>(doc, "order");
  std::vector<RatFunc> coeffs;
  for (const auto& s : field<std::vector<std::string>>(doc, "coeffs")) coeffs.push_back(parse_expr(s, max_param));
  if (coeffs.size() != order || order == 0) throw DomainError("operator order does not match its coefficients");
  return DiffOperator(std::move(coeffs));
}

json to_json(const GaloisElement& m) {
  json doc = header("galois");
  doc["n"] = m.n();
  json rows = json::array();
  for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.matrix().cols(); ++c) row.push_back(m.matrix()(r, c).text());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

GaloisElement galois_from_json(const json& doc) {
  expect_kind(doc, "galois");
  const auto n = field<unsigned>(doc, "n");
  const auto rows = field<std::vector<std::vector<std::string>>>(doc, "matrix");
  if (rows.size() != n + 1) throw DomainError("galois matrix must be (n+1)x(n+1)");
  Matrix<RatFunc> m(n + 1, n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    if (rows[r].size() != n + 1) throw DomainError("galois matrix must be (n+1)x(n+1)");
    for (std::size_t c = 0; c <= n; ++c) m(r, c) = parse_expr(rows[r][c], n);
  }
  return GaloisElement::from_matrix(m);
}

json to_json(const ConditionCReport& report) {
  json doc = header("condition_c");
  doc["holds"] = report.holds;
  doc["rank"] = report.rank;
  doc["poles"] = json::array();
  for (const auto& p : report.poles) doc["poles"].push_back({{"location", p.location.text()}, {"order", p.order}});
  json rows = json::array();
  for (std::size_t r = 0; r < report.residues.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < report.residues.cols(); ++c) row.push_back(report.residues(r, c).text());
    rows.push_back(std::move(row));
  }
  doc["residue_matrix"] = std::move(rows);
  doc["note"] = "polynomial parts and poles of order >= 2 are always integrable in F and impose no constraint";
  if (report.witness) {
    json c = json::array();
    for (const auto& ci : report.witness->c) c.push_back(ci.text());
    doc["witness"] = {{"c", std::move(c)}, {"f", report.witness->antiderivative.text()}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

json to_json(const NumericCheckReport& report) {
  json doc = header("numeric_check");
  doc["passed"] = report.passed;
  doc["max_residual"] = report.max_residual;
  doc["tol"] = report.tol;
  doc["samples"] = report.samples;
  doc["per_sample"] = json::array();
  for (const auto& s : report.per_sample)
    doc["per_sample"].push_back({{"z", s.z}, {"label", s.label}, {"residual", s.residual}});
  return doc;
}

}  // namespace unipv
