#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "unipv/cli.hpp"
#include "unipv/errors.hpp"
#include "unipv/serialize.hpp"

using namespace unipv;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "unipv");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("split and literal parsing") {
  CHECK(split_top_level("1/(z+a1), x[1,2] ,(a,b)", ',') == std::vector<std::string>{"1/(z+a1)", "x[1,2]", "(a,b)"});
  CHECK(split_top_level("", ',').empty());
  const auto m = parse_matrix("1,a1;0,1", 1);
  CHECK(m(0, 1) == parse_expr("a1", 1));
  CHECK_THROWS_AS(parse_matrix("1,2;3", 1), ParseError);
  const auto e = parse_extra("1,3: z^2 ; 2,4:a1", 3);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == ExtraEntry{1, 3, parse_expr("z^2", 3)});
  CHECK(e[1].col == 4);
  CHECK_THROWS_AS(parse_extra("1:z", 3), ParseError);
  CHECK_THROWS_AS(parse_extra("1,x:z", 3), ParseError);
}

TEST_CASE("document round trips") {
  const PVExtension ext = build_extension(3, {parse_expr("1/(z+a1)", 3), parse_expr("1/(z+a2)", 3), parse_expr("1/(z+a3)", 3)},
                                          {{1, 3, parse_expr("z", 3)}});
  const json doc = to_json(ext);
  CHECK(doc["schema"] == "unipv/1");
  CHECK(doc["derivation"].size() == 6);
  const PVExtension back = extension_from_json(json::parse(doc.dump()));
  CHECK(back.f() == ext.f());
  CHECK(back.extra() == ext.extra());
  CHECK(to_json(back) == doc);

  json broken = doc;
  broken["derivation"]["x[2,1]"] = "0";
  CHECK_THROWS_AS(extension_from_json(broken), DomainError);
  json wrong_schema = doc;
  wrong_schema["schema"] = "unipv/0";
  CHECK_THROWS_AS(extension_from_json(wrong_schema), DomainError);
  CHECK_THROWS_AS(extension_from_json(json{{"schema", "unipv/1"}, {"kind", "extension"}}), DomainError);

  for (unsigned n = 1; n <= 3; ++n) {
    const DiffOperator op = pv_operator(build_standard_extension(n));
    CHECK(operator_from_json(json::parse(to_json(op).dump()), n) == op);
  }
  json bad_op = to_json(pv_operator(build_standard_extension(1)));
  bad_op["order"] = 5;
  CHECK_THROWS_AS(operator_from_json(bad_op, 1), DomainError);

  const GaloisElement m = GaloisElement::from_matrix(parse_matrix("1,a1,2;0,1,1/3;0,0,1", 2));
  CHECK(galois_from_json(to_json(m)) == m);
}

TEST_CASE("documented command lines") {
  auto latex = run({"operator", "--n", "2", "--f", "1/(z+a1),1/(z+a2)", "--emit", "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\frac{d^{3}}{dz^{3}}") == 0);
  CHECK(latex.out.find("3 z + \\alpha_{1} + 2 \\alpha_{2}") != std::string::npos);

  auto verify = run({"verify", "--n", "3", "--f", "1/(z+a1),1/(z+a2),1/(z+a3)"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("FAIL") == std::string::npos);
  CHECK(verify.out.find("PASS annihilates x[3,1]") != std::string::npos);

  auto condc = run({"condc", "--f", "1/(z+1),1/(z+1)"});
  CHECK(condc.code == 1);
  CHECK(condc.out.find("holds=false") != std::string::npos);
  CHECK(condc.out.find("witness.c: 1 -1") != std::string::npos);
  CHECK(condc.err.rfind("status=verification-failed reason=", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"operator"}).code == 2);
  CHECK(run({"operator", "--n", "2", "--f", "1/(z+a1"}).code == 2);
  CHECK(run({"operator", "--n", "2", "--f", "1/(z+a1)"}).code == 2);
  CHECK(run({"operator", "--n", "2", "--emit", "pdf"}).code == 2);
  CHECK(run({"hyperlog", "--alphas", "0,x"}).code == 2);
  CHECK(run({"hyperlog", "--alphas", "0,0"}).code == 2);
  CHECK(run({"condc", "--f", "1/(z^2+1)"}).code == 3);
  CHECK(run({"hyperlog", "--alphas", "-1.5", "--z", "2"}).code == 3);
  CHECK(run({"galois", "--n", "1", "--matrix", "1,z;0,1"}).code == 3);
  CHECK(run({"galois", "--n", "1", "--matrix", "1,a1;0,1"}).code == 0);
  CHECK(run({"condc", "--f", "1/(z+a1),1/(z+a2)"}).code == 0);
  auto r = run({"construct", "--n", "2", "--extra", "1,2:z"});
  CHECK(r.code == 3);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(r.err.rfind("status=computation-error reason=\"", 0) == 0);
}

TEST_CASE("determinism and structured round trip through the CLI") {
  const std::vector<std::string> args{"operator", "--n", "3", "--emit", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const DiffOperator op = operator_from_json(json::parse(a.out), 3);
  CHECK(op == pv_operator(build_standard_extension(3)));

  auto e = run({"construct", "--n", "2", "--extra", "1,3:z", "--emit", "json"});
  CHECK(extension_from_json(json::parse(e.out)).extra().size() == 1);

  auto h1 = run({"hyperlog", "--alphas", "0,1", "--emit", "json"});
  auto h2 = run({"hyperlog", "--alphas", "0,1", "--emit", "json"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);
  const json doc = json::parse(h1.out);
  CHECK(doc["operator"]["passed"] == true);
  CHECK(doc["derivation"]["per_sample"].size() == 15);
}

TEST_CASE("output file and config document") {
  const auto out = temp_file("unipv_cli_test_op.txt");
  auto r = run({"operator", "--n", "1", "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "d^2/dz^2+(1/(z+a1))*d/dz");
  std::filesystem::remove(out);

  const auto cfg = temp_file("unipv_cli_test.toml");
  std::ofstream(cfg) << "[condc]\nf = \"1/(z+1)^2\"\nemit = \"json\"\n";
  auto c = run({"--config", cfg.string(), "condc"});
  CHECK(c.code == 1);
  const json doc = json::parse(c.out);
  CHECK(doc["witness"]["f"] == "-1/(z+1)");
  std::filesystem::remove(cfg);
}
