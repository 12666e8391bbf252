#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pdla/io.hpp"
#include "pdla_tools/commands.hpp"

using namespace pdla;
using namespace pdla::tools;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pdla_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  write_text_file(p.string(), text);
  return p.string();
}

}  // namespace

TEST(Io, CoverRoundTrip) {
  CoverInstance inst;
  inst.n = 3;
  inst.sets = {{1.0, {0, 1}}, {2.5, {2}}};
  inst.arrivals = {0, 2};
  const auto back = parse_cover_instance(to_json(inst));
  EXPECT_EQ(back.n, 3u);
  ASSERT_EQ(back.sets.size(), 2u);
  EXPECT_EQ(back.sets[1].weight, 2.5);
  EXPECT_EQ(back.sets[0].elements, (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(back.arrivals, inst.arrivals);
  EXPECT_EQ(parse_cover_prediction(to_json(CoverPrediction{{1}})).sets,
            std::vector<SetId>{1});
}

TEST(Io, SkiDocument) {
  const auto doc = parse_ski(R"({"N": 10, "B": 4, "n_pred": 12, "lambda": 0.5})");
  EXPECT_EQ(doc.instance.N, 10);
  EXPECT_EQ(doc.instance.B, 4);
  EXPECT_EQ(doc.prediction.n_pred, 12);
  EXPECT_EQ(doc.lambda, 0.5);
  EXPECT_FALSE(parse_ski(R"({"N": 1, "B": 4, "n_pred": 0})").lambda.has_value());
  EXPECT_EQ(parse_ski(to_json(doc)).instance.N, 10);
}

TEST(Io, BahncardAndTcpRoundTrip) {
  BahncardInstance b;
  b.trips = {0, 3, 3};
  b.B = 5.0;
  b.beta = 0.2;
  b.T = 10;
  const auto bb = parse_bahncard_instance(to_json(b));
  EXPECT_EQ(bb.trips, b.trips);
  EXPECT_EQ(bb.T, 10);
  EXPECT_EQ(bb.beta, 0.2);
  EXPECT_EQ(parse_bahncard_prediction(to_json(BahncardPrediction{{0}})).cards,
            std::vector<TimeStep>{0});
  const TcpInstance t{{1, 0, 2}, 100};
  EXPECT_EQ(parse_tcp_instance(to_json(t)).counts, t.counts);
  EXPECT_EQ(parse_tcp_prediction(to_json(TcpPrediction{{2}})).acks,
            std::vector<TimeStep>{2});
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_tcp_instance("{not json"), ParseError);
  EXPECT_THROW(parse_tcp_instance(R"({"d": 10})"), ParseError);
  EXPECT_THROW(parse_ski(R"({"N": "ten", "B": 4, "n_pred": 1})"), ParseError);
  EXPECT_THROW(read_text_file("/nonexistent/pdla/file.json"), IoError);
}

TEST(CliRun, SkiZeroDays) {
  const auto inst = write("ski0.json", R"({"N": 0, "B": 5, "n_pred": 3, "lambda": 0.5})");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run({"ski", inst, "", std::nullopt, 1}, out, err), kExitOk);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["alg_cost"], 0.0);
  EXPECT_EQ(doc["rounded_cost"], 0.0);
  EXPECT_TRUE(doc["all_checks_ok"].get<bool>());
}

TEST(CliRun, TcpSingleBurstWithOptimalPrediction) {
  const auto inst = write("burst.json", R"({"d": 100, "counts": [0, 0, 5, 0]})");
  const auto pred = write("burst_pred.json", R"({"acks": [2]})");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run({"tcp", inst, pred, 0.4, std::nullopt}, out, err), kExitOk);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_LE(doc["ratio"].get<double>(), 3.03);
  EXPECT_EQ(doc["opt_cost"], 1.0);
  EXPECT_FALSE(doc.contains("rounded_cost"));
}

TEST(CliRun, AllProblems) {
  const auto cover = write("cover.json",
      R"({"n": 3, "sets": [{"w": 1.0, "elems": [0, 1]}, {"w": 2.0, "elems": [1, 2]}], "arrivals": [0, 2, 1]})");
  const auto cover_pred = write("cover_pred.json", R"({"sets": [1]})");
  const auto bahn = write("bahn.json", R"({"trips": [0, 1, 2, 9, 30], "B": 2.0, "beta": 0.25, "T": 10})");
  const auto bahn_pred = write("bahn_pred.json", R"({"cards": [0]})");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run({"setcover", cover, cover_pred, 0.5, std::nullopt}, out, err), kExitOk);
  EXPECT_EQ(cmd_run({"bahncard", bahn, bahn_pred, 0.5, 3}, out, err), kExitOk);
}

TEST(CliRun, ErrorExitCodes) {
  const auto bad = write("bad.json", "{\"d\": 100, \"counts\": [1, 2");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run({"tcp", bad, bad, 0.5, std::nullopt}, out, err), kExitParse);
  EXPECT_EQ(cmd_run({"tcp", "/nonexistent/x.json", bad, 0.5, std::nullopt}, out, err),
            kExitIo);
  const auto inst = write("ok.json", R"({"d": 10, "counts": [1]})");
  const auto pred = write("ok_pred.json", R"({"acks": [0]})");
  EXPECT_EQ(cmd_run({"tcp", inst, pred, 1.5, std::nullopt}, out, err), kExitDomain);
  EXPECT_EQ(cmd_run({"tcp", inst, "", 0.5, std::nullopt}, out, err), kExitDomain);
}

TEST(CliSweep, IteratedPoissonGridRowCountAndStability) {
  SweepOptions o;
  o.spec.dists = {DistributionSpec::iterated_poisson()};
  o.spec.length = 100;
  o.spec.threads = 3;
  o.aggregate_out_path = scratch("agg.csv").string();
  std::ostringstream a, b, err;
  ASSERT_EQ(cmd_sweep(o, a, err), kExitOk);
  o.spec.threads = 1;
  ASSERT_EQ(cmd_sweep(o, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());

  std::istringstream rows(a.str());
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line,
            "problem,dist,lambda,replacement_rate,trial,seed,alg_cost,opt_cost,"
            "pred_cost,ratio,consistency_bound,robustness_bound,all_checks_ok");
  std::size_t count = 0;
  std::map<std::pair<std::string, std::string>, std::pair<double, int>> means;
  while (std::getline(rows, line)) {
    ++count;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    ASSERT_EQ(f.size(), 13u);
    auto& m = means[{f[2], f[3]}];
    m.first += std::stod(f[9]);
    ++m.second;
  }
  EXPECT_EQ(count, 440u);

  std::istringstream agg(read_text_file(o.aggregate_out_path));
  std::getline(agg, line);
  std::size_t cells = 0;
  while (std::getline(agg, line)) {
    ++cells;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    const auto& m = means.at({f[2], f[3]});
    EXPECT_NEAR(std::stod(f[5]), m.first / m.second, 1e-9);
  }
  EXPECT_EQ(cells, 44u);
}

TEST(CliSweep, LambdaOneIsFlatInReplacementRate) {
  SweepOptions o;
  o.spec.dists = {DistributionSpec::poisson()};
  o.spec.lambdas = {1.0};
  o.spec.length = 100;
  o.spec.trials = 3;
  const auto rows = run_sweep(o.spec);
  for (const auto& r : rows) {
    const auto& base = rows[static_cast<std::size_t>(r.trial)];
    EXPECT_EQ(r.alg_cost, base.alg_cost);
  }
}

TEST(CliVerify, LemmasAndUnknownScope) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify("lemmas", out, err), kExitOk);
  EXPECT_NE(out.str().find("PASS ratio_inequality_grid"), std::string::npos);
  EXPECT_EQ(cmd_verify("everything", out, err), kExitDomain);
}

TEST(CliVerify, CertificatesReportObjective) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify("certificates", out, err), kExitOk);
  const std::string marker = "objective at lambda=1 ";
  const auto at = out.str().find(marker);
  ASSERT_NE(at, std::string::npos);
  EXPECT_NEAR(std::stod(out.str().substr(at + marker.size())), 1.5820, 1e-4);
}

TEST(CliGenerate, WritesParseableDocuments) {
  GenerateOptions o;
  o.dist = "pareto";
  o.length = 200;
  o.seed = 9;
  o.replacement_rate = 0.3;
  o.instance_out = scratch("gen_inst.json").string();
  o.prediction_out = scratch("gen_pred.json").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_generate(o, out, err), kExitOk);
  const auto inst = parse_tcp_instance(read_text_file(o.instance_out));
  const auto pred = parse_tcp_prediction(read_text_file(o.prediction_out));
  EXPECT_EQ(inst.counts.size(), 200u);
  EXPECT_TRUE(prediction_cost_tcp(inst, pred).covers_all);

  GenerateOptions same = o;
  same.instance_out.clear();
  same.prediction_out.clear();
  std::ostringstream combined;
  ASSERT_EQ(cmd_generate(same, combined, err), kExitOk);
  const auto doc = nlohmann::json::parse(combined.str());
  EXPECT_EQ(doc["instance"]["counts"].get<std::vector<std::int64_t>>(), inst.counts);
  o.dist = "gaussian";
  EXPECT_EQ(cmd_generate(o, out, err), kExitDomain);
}
