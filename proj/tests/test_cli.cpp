#include <doctest.h>

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "testutil.hpp"

using nlohmann::json;
using testutil::run_cli;
using testutil::TempDir;

namespace {

struct Fixture {
  TempDir dir;
  std::string ws;

  Fixture() {
    const auto file = dir.path() / "workspace.json";
    testutil::write_file(file, testutil::workspace_json());
    ws = file.string();
  }
};

json parse_report(const std::string& text) {
  auto j = json::parse(text);
  REQUIRE(j.is_object());
  return j;
}

}  // namespace

TEST_CASE("dist computes the frozen workspace examples") {
  Fixture fx;

  auto jac = run_cli({"-w", fx.ws, "dist", "--metric", "jaccard", "A", "B"});
  CHECK(jac.status == 0);
  auto j = parse_report(jac.output);
  CHECK(j["results"]["distance"].get<double>() == doctest::Approx(2.0 / 3.0));
  CHECK(j["results"]["index"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(j["error"].is_null());

  auto ds = run_cli({"-w", fx.ws, "dist", "--metric", "dsigma", "A", "B"});
  CHECK(ds.status == 0);
  CHECK(parse_report(ds.output)["results"]["distance"].get<double>() ==
        doctest::Approx(1.5));

  auto heavy = run_cli(
      {"-w", fx.ws, "dist", "--metric", "dsigma", "--measure", "heavy", "A", "B"});
  CHECK(heavy.status == 0);
  CHECK(parse_report(heavy.output)["results"]["distance"].get<double>() ==
        doctest::Approx(4.0));

  auto dr = run_cli({"-w", fx.ws, "dist", "--metric", "dr:2", "f", "g"});
  CHECK(dr.status == 0);
  CHECK(parse_report(dr.output)["results"]["distance"].get<double>() ==
        doctest::Approx(0.75));

  auto dinf = run_cli({"-w", fx.ws, "dist", "--metric", "dr:inf", "f", "g"});
  CHECK(dinf.status == 0);
  CHECK(parse_report(dinf.output)["results"]["distance"].get<double>() ==
        doctest::Approx(0.5));

  auto dd = run_cli({"-w", fx.ws, "dist", "--metric", "D", "f", "g"});
  CHECK(dd.status == 0);
  CHECK(parse_report(dd.output)["results"]["distance"].get<double>() ==
        doctest::Approx(0.75));

  auto atom = run_cli(
      {"-w", fx.ws, "dist", "--metric", "D", "--eta", "discrete:0.5:1", "f", "g"});
  CHECK(atom.status == 0);
  CHECK(parse_report(atom.output)["results"]["distance"].get<double>() ==
        doctest::Approx(1.5));

  auto dh = run_cli({"-w", fx.ws, "dist", "--metric", "DH", "M", "N"});
  CHECK(dh.status == 0);
  auto dhj = parse_report(dh.output);
  CHECK(dhj["results"]["distance"]["plus"].get<double>() == doctest::Approx(0.5));
  CHECK(dhj["results"]["distance"]["minus"].get<double>() == doctest::Approx(1.0));

  auto kern = run_cli({"-w", fx.ws, "dist", "--metric", "kernel", "--kernel", "K", "a", "b"});
  CHECK(kern.status == 0);
  CHECK(parse_report(kern.output)["results"]["distance"].get<double>() ==
        doctest::Approx(1.0));
}

TEST_CASE("dist error paths map to exit codes") {
  Fixture fx;

  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "jaccard", "A", "nosuch"}).status == 2);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "dsigma", "A", "P"}).status == 3);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "dsigma", "A", "f"}).status == 3);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "warp", "A", "B"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "kernel", "a", "b"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "dr:0.5", "f", "g"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "dist", "--metric", "D", "--eta", "bogus", "f", "g"}).status == 4);
  CHECK(run_cli({"dist", "--metric", "jaccard", "A", "B"}).status == 4);  // no workspace

  auto err = run_cli({"-w", fx.ws, "dist", "--metric", "jaccard", "A", "nosuch"});
  auto j = parse_report(err.output);
  CHECK_FALSE(j["error"].is_null());
  CHECK(j["exit_status"].get<int>() == 2);
}

TEST_CASE("between reports verdicts, witnesses, and gaps") {
  Fixture fx;

  auto crisp = run_cli({"-w", fx.ws, "between", "--mode", "crisp", "--witness", "--gap",
                        "A", "B", "AB_mid"});
  CHECK(crisp.status == 0);
  auto j = parse_report(crisp.output);
  CHECK(j["verdicts"]["between"].get<bool>());
  CHECK(j["results"]["witness"].is_array());
  CHECK(j["results"]["witness"].empty());
  CHECK(j["results"]["triangle_gap"].get<double>() == 0.0);
  CHECK(j["results"]["sqrt_triangle_gap"].get<double>() > 0.0);

  auto out = run_cli({"-w", fx.ws, "between", "--mode", "crisp", "--witness", "A", "B", "P"});
  CHECK(out.status == 3);  // different universe

  auto pw = run_cli({"-w", fx.ws, "between", "--mode", "pointwise", "f", "g", "mid"});
  CHECK(pw.status == 0);
  CHECK(parse_report(pw.output)["verdicts"]["pointwise"].get<bool>());

  auto alpha = run_cli({"-w", fx.ws, "between", "--mode", "alpha", "--gap", "f", "g", "mid"});
  CHECK(alpha.status == 0);
  auto aj = parse_report(alpha.output);
  CHECK(aj["verdicts"]["pointwise"].get<bool>());
  CHECK(aj["verdicts"]["alpha"].get<bool>());
  CHECK(std::abs(aj["results"]["metric_gap"].get<double>()) <= 1e-12);

  auto hyper = run_cli({"-w", fx.ws, "between", "--mode", "hyper", "M", "N", "M"});
  CHECK(hyper.status == 0);
  CHECK(parse_report(hyper.output)["verdicts"]["between"].get<bool>());

  auto halpha = run_cli({"-w", fx.ws, "between", "--mode", "h-alpha", "--witness",
                         "M", "N", "N"});
  CHECK(halpha.status == 0);
  auto hj = parse_report(halpha.output);
  CHECK(hj["verdicts"]["between"].get<bool>());
  CHECK(hj["verdicts"]["alpha"].get<bool>());
  CHECK(hj["results"]["witness"].is_object());

  CHECK(run_cli({"-w", fx.ws, "between", "--mode", "sideways", "A", "B", "A"}).status == 4);
}

TEST_CASE("cut selects by object kind") {
  Fixture fx;

  auto fcut = run_cli({"-w", fx.ws, "cut", "f", "--alpha", "0.25"});
  CHECK(fcut.status == 0);
  CHECK(parse_report(fcut.output)["results"]["members"] == json({"a", "c"}));

  auto mcut = run_cli({"-w", fx.ws, "cut", "M", "--alpha1", "0.25", "--alpha2", "0.25"});
  CHECK(mcut.status == 0);
  CHECK(parse_report(mcut.output)["results"]["members"] == json::array());

  CHECK(run_cli({"-w", fx.ws, "cut", "f"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "cut", "M", "--alpha", "0.5"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "cut", "M", "--alpha1", "0.9", "--alpha2", "0.5"}).status == 4);
  CHECK(run_cli({"-w", fx.ws, "cut", "nosuch", "--alpha", "0.5"}).status == 2);
  CHECK(run_cli({"-w", fx.ws, "cut", "A", "--alpha", "0.5"}).status == 3);
}

TEST_CASE("show lists the workspace inventory") {
  Fixture fx;

  auto all = run_cli({"-w", fx.ws, "show"});
  CHECK(all.status == 0);
  auto j = parse_report(all.output);
  CHECK(j["results"]["universes"] == json({"U", "V"}));
  CHECK(j["results"]["sets"] == json({"A", "AB_mid", "B", "P"}));
  CHECK(j["results"]["memberships"] == json({"f", "g", "mid"}));
  CHECK(j["results"]["hmemberships"] == json({"M", "N"}));
  CHECK(j["results"]["kernels"] == json({"K"}));
  CHECK(j["results"]["measures"] == json({"heavy"}));

  auto one = run_cli({"-w", fx.ws, "show", "f"});
  CHECK(one.status == 0);
  auto oj = parse_report(one.output);
  REQUIRE(oj["results"]["matches"].size() == 1);
  CHECK(oj["results"]["matches"][0]["kind"] == "membership");
  CHECK(oj["results"]["matches"][0]["value"]["values"]["a"].get<double>() == 0.5);

  CHECK(run_cli({"-w", fx.ws, "show", "nosuch"}).status == 2);
}

TEST_CASE("workspace directories combine JSON and CSV sources") {
  TempDir dir;
  testutil::write_file(dir.path() / "workspace.json", testutil::workspace_json());
  testutil::write_file(dir.path() / "sample.csv",
                       "id,weight,score,flag\n"
                       "e1,1.0,0.25,1\n"
                       "e2,2.0,0.75,0\n");

  auto all = run_cli({"-w", dir.path().string(), "show"});
  CHECK(all.status == 0);
  auto j = parse_report(all.output);
  CHECK(j["results"]["universes"] == json({"U", "V", "sample"}));
  CHECK(j["results"]["sets"] == json({"A", "AB_mid", "B", "P", "flag"}));
  CHECK(j["results"]["memberships"] == json({"f", "flag", "g", "mid", "score"}));

  auto cut = run_cli({"-w", dir.path().string(), "cut", "score", "--alpha", "0.5"});
  CHECK(cut.status == 0);
  CHECK(parse_report(cut.output)["results"]["members"] == json({"e2"}));
}

TEST_CASE("malformed workspaces exit with the input code") {
  TempDir dir;
  const auto bad = dir.path() / "broken.json";
  testutil::write_file(bad, "{ not json");
  CHECK(run_cli({"-w", bad.string(), "show"}).status == 4);

  const auto badcsv = dir.path() / "u.csv";
  testutil::write_file(badcsv, "id,weight,score\ne1,1.0,1.2\n");
  auto res = run_cli({"-w", badcsv.string(), "show"});
  CHECK(res.status == 4);
  auto j = parse_report(res.output);
  const auto message = j["error"].get<std::string>();
  CHECK(message.find("row 2") != std::string::npos);
  CHECK(message.find("'score'") != std::string::npos);

  CHECK(run_cli({"-w", (dir.path() / "missing.json").string(), "show"}).status == 4);
}

TEST_CASE("check runs the suites and reports per-property results") {
  auto res = run_cli({"check", "--suite", "crisp", "--exhaustive", "2", "--trials", "25"});
  CHECK(res.status == 0);
  auto j = parse_report(res.output);
  CHECK(j["verdicts"]["all_passed"].get<bool>());
  REQUIRE(j["results"]["suites"].size() == 1);
  CHECK(j["results"]["suites"][0]["suite"] == "crisp");
  CHECK(j["results"]["suites"][0]["passed"].get<bool>());
  for (const auto& prop : j["results"]["suites"][0]["properties"]) {
    CHECK(prop["passed"].get<bool>());
    CHECK(prop["cases"].get<long>() > 0);
  }

  CHECK(run_cli({"check", "--suite", "bogus"}).status == 2);
  CHECK(run_cli({"check", "--exhaustive", "9"}).status == 4);
  CHECK(run_cli({"check", "--suite", "crisp", "--trials", "0"}).status == 4);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const std::vector<std::string> args = {"check", "--suite",  "hyper",
                                         "--seed", "11",      "--trials", "200"};
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(second.status == 0);
  CHECK(first.output == second.output);
  CHECK_FALSE(first.output.empty());
}

TEST_CASE("table format flattens the same report") {
  Fixture fx;
  auto res = run_cli({"-w", fx.ws, "--format", "table", "dist", "--metric", "dsigma",
                      "A", "B"});
  CHECK(res.status == 0);
  CHECK(res.output.find("results.distance") != std::string::npos);
  CHECK(res.output.find("= 1.5") != std::string::npos);
  CHECK(res.output.find("command") != std::string::npos);

  auto json_res = run_cli({"-w", fx.ws, "dist", "--metric", "dsigma", "A", "B"});
  // Same invocation without the format flag parses as JSON with the same value.
  const auto report = parse_report(json_res.output);
  CHECK(report["results"]["distance"].get<double>() == doctest::Approx(1.5));

  // Every leaf of the JSON rendering must surface in the table under the same
  // dotted path with the identical serialized value.
  std::function<void(const json&, const std::string&)> expect_row =
      [&](const json& node, const std::string& path) {
        const bool branch =
            (node.is_object() && !node.empty()) ||
            (node.is_array() && std::any_of(node.begin(), node.end(), [](const json& v) {
               return v.is_object() || v.is_array();
             }));
        if (!branch) {
          if (!path.empty()) CHECK(res.output.find(path) != std::string::npos);
          CHECK(res.output.find("= " + node.dump()) != std::string::npos);
          return;
        }
        if (node.is_object()) {
          for (const auto& [key, value] : node.items()) {
            expect_row(value, path.empty() ? key : path + "." + key);
          }
        } else {
          for (std::size_t i = 0; i < node.size(); ++i) {
            expect_row(node.at(i), path + "[" + std::to_string(i) + "]");
          }
        }
      };
  expect_row(report, "");
}

TEST_CASE("global flags may follow the subcommand") {
  Fixture fx;
  auto res = run_cli({"dist", "--metric", "dsigma", "A", "B", "-w", fx.ws});
  CHECK(res.status == 0);
  CHECK(parse_report(res.output)["results"]["distance"].get<double>() ==
        doctest::Approx(1.5));
}

TEST_CASE("help and missing subcommands") {
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({}).status == 4);
  CHECK(run_cli({"frobnicate"}).status == 4);
}
