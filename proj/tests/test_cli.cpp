#include <doctest.h>

#include <sstream>

#include "apolar/cli.hpp"
#include "support.hpp"

using namespace apolar;
using namespace apolar::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "apolar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void check_round_trip(const nlohmann::json& outputs) {
  std::vector<Poly> gens;
  for (const auto& g : outputs.at("generators")) {
    Poly p = parse_poly(g.get<std::string>(), 3);
    CHECK(p.to_string() == g.get<std::string>());
    gens.push_back(p);
  }
  Ideal I(gens);
  CHECK(nlohmann::json(I.hilbert_function().values()) == outputs.at("hilbert_function"));
  CHECK(minimal_generator_count(I) == outputs.at("minimal_generator_count").get<int>());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    Report a = cmd_classify("1,3,3,4,2,1");
    CHECK(a.exit_code == kOk);
    CHECK(a.json["schema"] == 1);
    CHECK(a.json["outputs"]["verdict"] == "TypeIII");
    CHECK(a.json["outputs"]["witness"]["d"] == 4);
    CHECK(a.json["outputs"]["witness"]["r"] == 0);
    CHECK(a.json["outputs"]["witness"]["peak"] == 3);

    Report b = cmd_classify("1,3,3,4,3,1");
    CHECK(b.exit_code == kRejected);
    CHECK(b.json["outputs"]["verdict"] == "NotGorenstein");

    Report c = cmd_classify("1,3,3,5");
    CHECK(c.exit_code == kRejected);
    CHECK(c.json["outputs"]["verdict"] == "NotOSequence");

    Report d = cmd_classify("1,3,x");
    CHECK(d.exit_code == kUsage);
    CHECK(d.json["error"]["kind"] == "ParseError");
  }

  TEST_CASE("construct") {
    Report a = cmd_construct("1,3,3,4,2,1", std::string("X^3*Y^2"), std::string("Y^3"));
    REQUIRE(a.exit_code == kOk);
    const auto& o = a.json["outputs"];
    CHECK(o["ideal"] == "xz; yz + x^3; z^2 + y^3");
    CHECK(o["hilbert_function"] == nlohmann::json({1, 3, 3, 4, 2, 1}));
    CHECK(o["minimal_generator_count"] == 3);
    CHECK(o["steps"]["U"] == "0");
    CHECK(o["steps"]["V"] == "-x^3");
    CHECK(o["steps"]["W"] == "-y^3");
    CHECK(o["steps"]["a2p"] == "x^2");
    CHECK(o["steps"]["h_prime"] == nlohmann::json({1, 2, 3, 4, 2, 1}));
    CHECK(o["steps"]["h_double_prime"] == nlohmann::json({1, 2, 3, 3, 2, 1}));
    CHECK(o["verification"]["round_trip"] == true);
    check_round_trip(o);

    Report b = cmd_construct("1,3,3,2,1", std::nullopt, std::nullopt);
    REQUIRE(b.exit_code == kOk);
    std::vector<Poly> g;
    for (const auto& s : b.json["outputs"]["generators"]) g.push_back(parse_poly(s.get<std::string>(), 3));
    CHECK(oracle::same_ideal(g, support::gens("yz - x^3; xz - y^3; xy - z^2"), 3));

    Report c = cmd_construct("1,3,3,4,3,1", std::nullopt, std::nullopt);
    CHECK(c.exit_code == kRejected);
    CHECK(c.json["error"]["verdict"] == "NotGorenstein");

    Report d = cmd_construct("1,3,3,4,2,1", std::string("X^5"), std::nullopt);
    CHECK(d.exit_code == kRejected);

    Report e = cmd_construct("1,3,3,4,2,1", std::nullopt, std::nullopt, "fp:2");
    CHECK(e.exit_code == kUsage);
    CHECK(e.json["error"]["kind"] == "FieldError");

    Report f = cmd_construct("1,3,3,4,4,3,2,1", std::nullopt, std::nullopt, "fp:101");
    CHECK(f.exit_code == kOk);
    CHECK(f.json["field"] == "fp:101");
  }

  TEST_CASE("decompose") {
    Report a = cmd_decompose(std::nullopt, std::string("X^2*Y^2+Z^2"));
    REQUIRE(a.exit_code == kOk);
    CHECK(a.json["outputs"]["decomposition"]["text"] == "0:(1,2,3,2,1), 2:(0,1)");
    CHECK(a.json["outputs"]["agreement"] == "other: not CI-realizable");

    Report b = cmd_decompose(std::string("xz; yz+x^4; z^2+y^3"), std::nullopt);
    REQUIRE(b.exit_code == kOk);
    CHECK(b.json["outputs"]["decomposition"]["text"] == "0:(1,2,3,3,3,2,1), 2:(0,1,0,1)");
    CHECK(b.json["outputs"]["agreement"] == "ci");

    Report c = cmd_decompose(std::string("x^2; y^2; z^2"), std::nullopt);
    CHECK(c.json["outputs"]["decomposition"]["text"] == "0:(1,3,3,1)");

    Report d = cmd_decompose(std::string("xz; yz; z^2 - y^3; x^4"), std::nullopt);
    CHECK(d.exit_code == kRejected);

    Report e = cmd_decompose(std::nullopt, std::string("X^2*Y^2+Z^2"), false);
    CHECK_FALSE(e.json["outputs"].contains("prediction"));
  }

  TEST_CASE("hf and ann") {
    Report a = cmd_hf("xz; yz; z^2 - y^3; x^4");
    REQUIRE(a.exit_code == kOk);
    CHECK(a.json["outputs"]["hilbert_function"] == nlohmann::json({1, 3, 3, 4, 2, 1}));
    CHECK(a.json["outputs"]["minimal_generator_count"] == 4);
    CHECK(a.json["outputs"]["gorenstein"] == false);

    Report b = cmd_ann("X^4+Y^3+Z^3");
    REQUIRE(b.exit_code == kOk);
    CHECK(b.json["outputs"]["hilbert_function"] == nlohmann::json({1, 3, 3, 1, 1}));
    CHECK(b.json["outputs"]["gorenstein"] == true);
    CHECK(b.json["outputs"]["complete_intersection"] == false);
    check_round_trip(b.json["outputs"]);

    Report c = cmd_hf("x^2 +* y");
    CHECK(c.exit_code == kUsage);
    CHECK(c.json["error"].contains("position"));

    Report d = cmd_hf("x^2; xy", "q");
    CHECK(d.exit_code == kRejected);
  }

  TEST_CASE("sweep") {
    Report a = cmd_sweep(3, "q", 1);
    REQUIRE(a.exit_code == kOk);
    CHECK(a.json["outputs"]["admissible"] == 1);
    CHECK(a.json["outputs"]["results"][0]["h"] == "1,3,3,1");

    Report b = cmd_sweep(5, "q", 2);
    REQUIRE(b.exit_code == kOk);
    CHECK(b.json["outputs"]["failures"] == 0);
    for (const auto& r : b.json["outputs"]["results"]) CHECK(r["ok"] == true);
  }

  TEST_CASE("command line front end") {
    Run a = run_cli({"construct", "1,3,3,4,2,1", "--dual-F", "X^3*Y^2", "--dual-G", "Y^3"});
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["outputs"]["ideal"] == "xz; yz + x^3; z^2 + y^3");

    CHECK(run_cli({"classify", "1,3,3,4,3,1"}).code == 2);
    CHECK(run_cli({"classify", "1,3,3,5"}).code == 2);
    CHECK(run_cli({"hf", "x^2 + "}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"--field", "fp:4", "classify", "1,3,3,1"}).code == 1);

    Run p = run_cli({"--pretty", "classify", "1,3,3,2,1"});
    CHECK(p.code == 0);
    CHECK(p.out.find("outputs.verdict: TypeI") != std::string::npos);

    Run h = run_cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("construct") != std::string::npos);
  }
}
