#pragma once

// JSON encodings of instances and predictions.
//
//   set cover   {"n": 3, "sets": [{"w": 1.0, "elems": [0, 1]}], "arrivals": [0]}
//               prediction {"sets": [0]}
//   ski rental  {"N": 10, "B": 4, "n_pred": 12, "lambda": 0.5}
//   bahncard    {"trips": [0, 3], "B": 5.0, "beta": 0.2, "T": 10}
//               prediction {"cards": [0]}
//   tcp         {"d": 100, "counts": [1, 0, 2]}
//               prediction {"acks": [2]}

#include <optional>
#include <stdexcept>
#include <string>

#include "pdla/bahncard.hpp"
#include "pdla/setcover.hpp"
#include "pdla/skirental.hpp"
#include "pdla/tcpack.hpp"

namespace pdla {

/// Malformed JSON or a document missing required fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

CoverInstance parse_cover_instance(const std::string& text);
CoverPrediction parse_cover_prediction(const std::string& text);

struct SkiDocument {
  SkiInstance instance;
  SkiPrediction prediction;
  std::optional<double> lambda;
};
SkiDocument parse_ski(const std::string& text);

BahncardInstance parse_bahncard_instance(const std::string& text);
BahncardPrediction parse_bahncard_prediction(const std::string& text);

TcpInstance parse_tcp_instance(const std::string& text);
TcpPrediction parse_tcp_prediction(const std::string& text);

std::string to_json(const CoverInstance& instance);
std::string to_json(const CoverPrediction& prediction);
std::string to_json(const SkiDocument& document);
std::string to_json(const BahncardInstance& instance);
std::string to_json(const BahncardPrediction& prediction);
std::string to_json(const TcpInstance& instance);
std::string to_json(const TcpPrediction& prediction);

}  // namespace pdla
