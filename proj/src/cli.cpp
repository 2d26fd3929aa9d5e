#include "unipv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "unipv/errors.hpp"
#include "unipv/serialize.hpp"

namespace unipv::cli {
namespace {

struct Options {
  unsigned n = 0;
  std::string f;
  std::string extra;
  std::string emit = "text";
  std::string output;
  std::string matrix;
  std::string alphas;
  std::string grid = "1:2:5";
  std::string check = "both";
  double tol = 1e-6;
  double quad_tol = 1e-10;
  double z0 = 1.0;
  std::optional<double> z;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string document;
  bool ok = true;
  std::string reason;  // why verification failed
};

Outcome done(std::string document) { return {std::move(document), true, ""}; }

std::string quote(std::string s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n' || c == '\r') c = ' ';
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& s : split_top_level(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v))
      throw UsageError(std::string("bad number '") + s + "' in " + what);
    out.push_back(v);
  }
  return out;
}

// "a:b:k" for k evenly spaced points, or an explicit comma list.
std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_doubles(text, "--grid");
  const auto parts = split_top_level(text, ':');
  if (parts.size() != 3) throw UsageError("--grid expects a:b:count or a comma list");
  const auto ends = parse_doubles(parts[0] + "," + parts[1], "--grid");
  const auto count = parse_doubles(parts[2], "--grid");
  if (count[0] < 1 || count[0] != std::floor(count[0]) || count[0] > 10000)
    throw UsageError("--grid count must be an integer in 1..10000");
  const int k = static_cast<int>(count[0]);
  std::vector<double> g;
  for (int i = 0; i < k; ++i) g.push_back(k == 1 ? ends[0] : ends[0] + (ends[1] - ends[0]) * i / (k - 1));
  return g;
}

std::string matrix_text(const Matrix<RatFunc>& m, const std::string& indent) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += indent + "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).text();
    s += "]\n";
  }
  return s;
}

std::string matrix_latex(const Matrix<RatFunc>& m) {
  std::string s = "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " & " : "") + m(r, c).latex();
    s += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return s + "\\end{pmatrix}";
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

PVExtension extension_from(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  std::vector<RatFunc> f;
  if (o.f.empty()) {
    for (unsigned j = 1; j <= o.n; ++j) f.push_back(RatFunc(1) / (RatFunc(Variable::z()) + RatFunc(Variable::param(j))));
  } else {
    for (const auto& s : split_top_level(o.f, ',')) f.push_back(parse_expr(s, o.n));
    if (f.size() != o.n)
      throw UsageError("--f has " + std::to_string(f.size()) + " entries but --n is " + std::to_string(o.n));
  }
  return build_extension(o.n, std::move(f), parse_extra(o.extra, o.n));
}

Outcome cmd_construct(const Options& o) {
  const PVExtension ext = extension_from(o);
  if (o.emit == "json") return done(dump(to_json(ext)));
  std::ostringstream os;
  if (o.emit == "latex") {
    os << "A = " << matrix_latex(ext.A()) << "\n";
    os << "g = " << matrix_latex(ext.g()) << "\n";
    for (const auto& [v, d] : ext.derivation().table()) os << v.latex() << "' = " << d.latex() << "\n";
    return done(os.str());
  }
  os << "n=" << ext.n() << "\n";
  for (std::size_t j = 0; j < ext.f().size(); ++j) os << "f" << j + 1 << "=" << ext.f()[j].text() << "\n";
  for (const auto& e : ext.extra()) os << "extra(" << e.row << "," << e.col << ")=" << e.value.text() << "\n";
  os << "A=\n" << matrix_text(ext.A(), "  ");
  os << "g=\n" << matrix_text(ext.g(), "  ");
  os << "derivation:\n";
  for (const auto& [v, d] : ext.derivation().table()) os << "  " << v.text() << "'=" << d.text() << "\n";
  return done(os.str());
}

Outcome cmd_operator(const Options& o) {
  const DiffOperator op = pv_operator(extension_from(o));
  if (o.emit == "json") return done(dump(to_json(op)));
  return done((o.emit == "latex" ? op.latex() : op.text()) + "\n");
}

Outcome cmd_verify(const Options& o) {
  const PVExtension ext = extension_from(o);
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("matrix_identity", check_matrix_identity(ext));
  const DiffOperator op = pv_operator(ext);
  checks.emplace_back("operator_order", op.order() == ext.n() + 1);
  checks.emplace_back("coefficients_in_F", coeffs_in_base_field(op));
  for (const auto& y : ext.solution_basis())
    checks.emplace_back("annihilates " + y.text(), apply_operator(op, y, ext.derivation()).is_zero());
  checks.emplace_back("non_solution_z", !apply_operator(op, RatFunc(Variable::z()), ext.derivation()).is_zero());

  Outcome result;
  for (const auto& [name, ok] : checks)
    if (!ok && result.ok) {
      result.ok = false;
      result.reason = "check failed: " + name;
    }
  if (o.emit == "json") {
    json doc{{"schema", kSchema}, {"kind", "verify"}, {"passed", result.ok}, {"checks", json::array()}};
    for (const auto& [name, ok] : checks) doc["checks"].push_back({{"name", name}, {"passed", ok}});
    result.document = dump(doc);
  } else {
    for (const auto& [name, ok] : checks) result.document += (ok ? "PASS " : "FAIL ") + name + "\n";
  }
  return result;
}

Outcome cmd_galois(const Options& o) {
  if (o.matrix.empty()) throw UsageError("--matrix is required");
  const PVExtension ext = extension_from(o);
  const GaloisElement m = GaloisElement::from_matrix(parse_matrix(o.matrix, o.n));
  if (m.n() != ext.n()) throw UsageError("--matrix must be " + std::to_string(o.n + 1) + "x" + std::to_string(o.n + 1));
  const bool ok = verify_diff_automorphism(ext, m);
  const auto images = sigma_images(ext, m);
  Outcome result{"", ok, ok ? "" : "sigma does not commute with the derivation"};
  if (o.emit == "json") {
    json doc{{"schema", kSchema}, {"kind", "galois_check"}, {"automorphism", ok}, {"element", to_json(m)}};
    json im = json::object();
    for (const auto& [v, u] : images) im[v.text()] = u.text();
    doc["images"] = std::move(im);
    result.document = dump(doc);
  } else {
    std::ostringstream os;
    for (const auto& [v, u] : images)
      os << "sigma(" << (o.emit == "latex" ? v.latex() : v.text()) << ")=" << (o.emit == "latex" ? u.latex() : u.text())
         << "\n";
    os << "automorphism=" << (ok ? "true" : "false") << "\n";
    result.document = os.str();
  }
  return result;
}

Outcome cmd_condc(const Options& o) {
  const auto texts = split_top_level(o.f, ',');
  if (texts.empty()) throw UsageError("--f is required");
  const unsigned bound = o.n ? o.n : static_cast<unsigned>(texts.size());
  std::vector<RatFunc> f;
  for (const auto& s : texts) f.push_back(parse_expr(s, bound));
  const ConditionCReport report = check_condition_c(f);
  Outcome result{o.emit == "json" ? dump(to_json(report)) : to_text(report), report.holds,
                 report.holds ? "" : "condition C fails; witness attached"};
  return result;
}

Outcome cmd_hyperlog(const Options& o) {
  const auto alphas = parse_doubles(o.alphas, "--alphas");
  if (alphas.empty()) throw UsageError("--alphas is required");
  if (!(o.tol > 0) || !(o.quad_tol > 0)) throw UsageError("tolerances must be positive");
  if (o.z) {
    const double v = eval_hyperlog(alphas, o.z0, *o.z, o.quad_tol);
    std::ostringstream os;
    os.precision(17);
    if (o.emit == "json") {
      json doc{{"schema", kSchema}, {"kind", "hyperlog_value"}, {"alphas", alphas}, {"z0", o.z0}, {"z", *o.z}, {"value", v}};
      return done(dump(doc));
    }
    os << v << "\n";
    return done(os.str());
  }
  const unsigned n = o.n ? o.n : static_cast<unsigned>(alphas.size());
  if (alphas.size() < n) throw UsageError("--alphas needs at least n values");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alphas[i] == alphas[j]) throw UsageError("--alphas must be distinct");
  if (o.check != "derivation" && o.check != "operator" && o.check != "both")
    throw UsageError("--check must be derivation, operator or both");
  const auto grid = parse_grid(o.grid);

  std::vector<std::pair<std::string, NumericCheckReport>> reports;
  if (o.check != "operator")
    reports.emplace_back("derivation", numeric_derivation_check(alphas, n, grid, o.tol, o.z0, o.quad_tol));
  if (o.check != "derivation") {
    const DiffOperator op = pv_operator(build_standard_extension(n));
    reports.emplace_back("operator", numeric_operator_residual(op, alphas, grid, o.tol, o.z0, o.quad_tol));
  }
  Outcome result;
  for (const auto& [name, r] : reports)
    if (!r.passed && result.ok) {
      result.ok = false;
      result.reason = name + " check exceeded tolerance";
    }
  if (o.emit == "json") {
    json doc{{"schema", kSchema}, {"kind", "hyperlog_check"}, {"passed", result.ok}};
    for (const auto& [name, r] : reports) doc[name] = to_json(r);
    result.document = dump(doc);
  } else {
    for (const auto& [name, r] : reports) result.document += "[" + name + "]\n" + to_text(r);
  }
  return result;
}

void add_common(CLI::App* sub, Options& o, bool needs_n) {
  auto* n = sub->add_option("--n", o.n, "extension size")->check(CLI::Range(1u, 64u));
  if (needs_n) n->required();
  sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "latex", "json"}));
  sub->add_option("--output,-o", o.output, "write the document to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unipotent Picard-Vessiot extensions: construction, operators, Galois action, checks", "unipv"};
  app.set_config("--config", "", "TOML/INI file mirroring the flags (sections per subcommand)");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build the extension and print A, g and the derivation");
  auto* op = app.add_subcommand("operator", "print the operator L annihilating the solution basis");
  auto* verify = app.add_subcommand("verify", "matrix identity, annihilation and membership checks");
  auto* galois = app.add_subcommand("galois", "check that a unitriangular matrix acts as a differential automorphism");
  auto* condc = app.add_subcommand("condc", "decide condition C by residues");
  auto* hyper = app.add_subcommand("hyperlog", "numeric hyperlogarithm checks");
  for (auto* sub : {construct, op, verify, galois}) {
    add_common(sub, o, true);
    sub->add_option("--f", o.f, "comma-separated f_1..f_n (default 1/(z+a_j))");
    sub->add_option("--extra", o.extra, "extra A entries 'row,col:value; ...'");
  }
  galois->add_option("--matrix", o.matrix, "row-major matrix 'm11,m12,..; m21,..'")->required();
  add_common(condc, o, false);
  condc->add_option("--f", o.f, "comma-separated functions of z and a_i")->required();
  add_common(hyper, o, false);
  hyper->add_option("--alphas", o.alphas, "comma-separated numeric alpha values")->required();
  hyper->add_option("--grid", o.grid, "a:b:count or comma list of z values")->capture_default_str();
  hyper->add_option("--tol", o.tol, "pass threshold for residuals")->capture_default_str();
  hyper->add_option("--quad-tol", o.quad_tol, "absolute quadrature tolerance")->capture_default_str();
  hyper->add_option("--z0", o.z0, "base point")->capture_default_str();
  hyper->add_option("--z", o.z, "evaluate L(alphas | z, z0) instead of running checks");
  hyper->add_option("--check", o.check, "derivation, operator or both")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "status=usage-error reason=" << quote(msg) << "\n";
    return kUsage;
  }

  Outcome outcome;
  try {
    if (*construct) outcome = cmd_construct(o);
    if (*op) outcome = cmd_operator(o);
    if (*verify) outcome = cmd_verify(o);
    if (*galois) outcome = cmd_galois(o);
    if (*condc) outcome = cmd_condc(o);
    if (*hyper) outcome = cmd_hyperlog(o);
  } catch (const UsageError& e) {
    err << "status=usage-error reason=" << quote(e.what()) << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "status=usage-error reason=" << quote(e.what()) << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "status=computation-error reason=" << quote(e.what()) << "\n";
    return kComputation;
  }

  if (o.output.empty()) {
    out << outcome.document;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file << outcome.document;
    if (!file) {
      err << "status=usage-error reason=" << quote("cannot write " + o.output) << "\n";
      return kUsage;
    }
  }
  if (!outcome.ok) {
    err << "status=verification-failed reason=" << quote(outcome.reason) << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace unipv::cli
