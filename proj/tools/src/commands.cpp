#include "pdla_tools/commands.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "pdla/io.hpp"
#include "pdla_tools/report.hpp"
#include "pdla_tools/suites.hpp"

namespace pdla::tools {

namespace {

SkiPrediction parse_ski_prediction(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    return SkiPrediction{doc.at("n_pred").get<std::int64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ski prediction: ") + e.what());
  }
}

RunReport run_report(const RunOptions& o) {
  const std::string instance_text = read_text_file(o.instance_path);
  auto prediction_text = [&] {
    if (o.prediction_path.empty()) {
      throw DomainError("--prediction is required for " + o.problem);
    }
    return read_text_file(o.prediction_path);
  };

  if (o.problem == "ski") {
    SkiDocument doc = parse_ski(instance_text);
    if (!o.prediction_path.empty()) {
      doc.prediction = parse_ski_prediction(read_text_file(o.prediction_path));
    }
    const double lambda = o.lambda ? *o.lambda : doc.lambda.value_or(1.0);
    RunReport r = evaluate_ski(doc.instance, doc.prediction, lambda);
    if (o.seed) {
      SeededRng rng(*o.seed, 0);
      r.rounded_cost = round_ski(run_pdla_ski(doc.instance, doc.prediction, lambda), rng);
    }
    return r;
  }
  const double lambda = o.lambda.value_or(1.0);
  if (o.problem == "setcover") {
    const auto inst = parse_cover_instance(instance_text);
    const auto pred = parse_cover_prediction(prediction_text());
    return evaluate_setcover(inst, pred, lambda);
  }
  if (o.problem == "bahncard") {
    const auto inst = parse_bahncard_instance(instance_text);
    const auto pred = parse_bahncard_prediction(prediction_text());
    RunReport r = evaluate_bahncard(inst, pred, lambda);
    if (o.seed) {
      SeededRng rng(*o.seed, 0);
      r.rounded_cost = round_bahncard(run_pdla_bahncard(inst, pred, lambda), inst, rng);
    }
    return r;
  }
  if (o.problem == "tcp") {
    const auto inst = parse_tcp_instance(instance_text);
    const auto pred = parse_tcp_prediction(prediction_text());
    RunReport r = evaluate_tcp(inst, pred, lambda);
    if (o.seed) {
      SeededRng rng(*o.seed, 0);
      r.rounded_cost = round_tcp(run_pdla_tcp(inst, pred, lambda), rng);
    }
    return r;
  }
  throw DomainError("unknown problem '" + o.problem + "'");
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunReport r = run_report(options);
    out << r.to_json() << '\n';
    return r.all_checks_ok() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_sweep(options.spec);
    if (options.out_path.empty()) {
      write_rows_csv(out, rows);
    } else {
      std::ostringstream csv;
      write_rows_csv(csv, rows);
      write_text_file(options.out_path, csv.str());
    }
    if (!options.aggregate_out_path.empty()) {
      std::ostringstream csv;
      write_aggregate_csv(csv, aggregate(rows));
      write_text_file(options.aggregate_out_path, csv.str());
    }
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.all_checks_ok ? 0 : 1;
    err << rows.size() << " rows, " << failed << " with failed checks\n";
    return failed == 0 ? kExitOk : kExitCheckFailed;
  });
}

int cmd_verify(const std::string& scope, std::ostream& out, std::ostream& err) {
  static const char* const kProblems[] = {"setcover", "ski", "bahncard", "tcp"};
  const bool all = scope == "all";
  if (!all && scope != "lemmas" && scope != "certificates" && scope != "oracles" &&
      scope != "duals") {
    err << "error: unknown scope '" << scope << "'\n";
    return kExitDomain;
  }
  return guarded(err, [&] {
    std::vector<SuiteResult> results;
    auto emit = [&](SuiteResult r) {
      out << format(r) << '\n' << std::flush;
      results.push_back(std::move(r));
    };
    if (all || scope == "lemmas") {
      emit(ratio_inequality_grid_suite());
      emit(recurrence_words_suite());
    }
    if (all || scope == "certificates") emit(certificate_suite());
    if (all || scope == "oracles") {
      for (const char* p : kProblems) emit(oracle_suite(p));
    }
    if (all || scope == "duals") {
      for (const char* p : kProblems) {
        for (double lambda : {0.1, 0.5, 1.0}) emit(dual_suite(p, lambda));
      }
    }
    if (all) {
      for (const char* p : kProblems) {
        for (double lambda : {0.1, 0.5, 1.0}) emit(run_checks_suite(p, lambda));
      }
      emit(ski_grid_suite());
      emit(ski_trace_suite());
      emit(ski_rounding_suite());
      emit(tcp_rounding_suite());
      emit(bahncard_rounding_suite());
    }
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok ? 0 : 1;
    out << (failed == 0 ? "ALL PASS" : "FAILURES") << " (" << results.size()
        << " suites, " << failed << " failed)\n";
    return failed == 0 ? kExitOk : kExitCheckFailed;
  });
}

int cmd_generate(const GenerateOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const DistributionSpec dist = parse_distribution(options.dist);
    const NoiseSpec noise{options.replacement_rate};
    noise.validate();
    SeededRng instance_rng(options.seed, 0);
    const TcpInstance real{generate(dist, options.length, instance_rng), options.d};
    real.validate();
    SeededRng noise_rng(options.seed, 1);
    const TcpInstance noisy{perturb(real.counts, noise, dist, noise_rng), options.d};
    const TcpPrediction prediction = make_prediction(noisy, &real);

    if (options.instance_out.empty() && options.prediction_out.empty()) {
      nlohmann::json doc;
      doc["instance"] = nlohmann::json::parse(to_json(real));
      doc["prediction"] = nlohmann::json::parse(to_json(prediction));
      out << doc.dump() << '\n';
      return kExitOk;
    }
    if (!options.instance_out.empty()) {
      write_text_file(options.instance_out, to_json(real) + "\n");
    } else {
      out << to_json(real) << '\n';
    }
    if (!options.prediction_out.empty()) {
      write_text_file(options.prediction_out, to_json(prediction) + "\n");
    } else {
      out << to_json(prediction) << '\n';
    }
    return kExitOk;
  });
}

}  // namespace pdla::tools
