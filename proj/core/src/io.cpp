#include "pdla/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pdla {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("error while writing " + path);
}

namespace {

json parse_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

template <typename T>
T field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
std::vector<T> list_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  if (!it->is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array");
  }
  return field<std::vector<T>>(doc, key);
}

std::vector<std::size_t> index_list(const json& doc, const char* key) {
  const auto raw = list_field<std::int64_t>(doc, key);
  std::vector<std::size_t> out;
  out.reserve(raw.size());
  for (auto v : raw) {
    if (v < 0) throw ParseError(std::string("field '") + key + "' has a negative id");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

CoverInstance parse_cover_instance(const std::string& text) {
  const json doc = parse_object(text);
  CoverInstance inst;
  const auto n = field<std::int64_t>(doc, "n");
  if (n < 0) throw ParseError("field 'n' must be >= 0");
  inst.n = static_cast<std::size_t>(n);
  const auto sets = doc.find("sets");
  if (sets == doc.end() || !sets->is_array()) {
    throw ParseError("field 'sets' must be an array");
  }
  for (const auto& s : *sets) {
    if (!s.is_object()) throw ParseError("each set must be an object");
    WeightedSet ws;
    ws.weight = field<double>(s, "w");
    ws.elements = index_list(s, "elems");
    inst.sets.push_back(std::move(ws));
  }
  inst.arrivals = index_list(doc, "arrivals");
  return inst;
}

CoverPrediction parse_cover_prediction(const std::string& text) {
  return CoverPrediction{index_list(parse_object(text), "sets")};
}

SkiDocument parse_ski(const std::string& text) {
  const json doc = parse_object(text);
  SkiDocument out;
  out.instance.N = field<std::int64_t>(doc, "N");
  out.instance.B = field<std::int64_t>(doc, "B");
  if (doc.contains("n_pred")) out.prediction.n_pred = field<std::int64_t>(doc, "n_pred");
  if (doc.contains("lambda")) out.lambda = field<double>(doc, "lambda");
  return out;
}

BahncardInstance parse_bahncard_instance(const std::string& text) {
  const json doc = parse_object(text);
  BahncardInstance inst;
  inst.trips = list_field<TimeStep>(doc, "trips");
  inst.B = field<double>(doc, "B");
  inst.beta = field<double>(doc, "beta");
  inst.T = field<TimeStep>(doc, "T");
  return inst;
}

BahncardPrediction parse_bahncard_prediction(const std::string& text) {
  return BahncardPrediction{list_field<TimeStep>(parse_object(text), "cards")};
}

TcpInstance parse_tcp_instance(const std::string& text) {
  const json doc = parse_object(text);
  TcpInstance inst;
  inst.d = field<std::int64_t>(doc, "d");
  inst.counts = list_field<std::int64_t>(doc, "counts");
  return inst;
}

TcpPrediction parse_tcp_prediction(const std::string& text) {
  return TcpPrediction{list_field<TimeStep>(parse_object(text), "acks")};
}

std::string to_json(const CoverInstance& instance) {
  json sets = json::array();
  for (const auto& s : instance.sets) {
    sets.push_back({{"w", s.weight}, {"elems", s.elements}});
  }
  return json{{"n", instance.n}, {"sets", sets}, {"arrivals", instance.arrivals}}
      .dump();
}

std::string to_json(const CoverPrediction& prediction) {
  return json{{"sets", prediction.sets}}.dump();
}

std::string to_json(const SkiDocument& document) {
  json doc{{"N", document.instance.N},
           {"B", document.instance.B},
           {"n_pred", document.prediction.n_pred}};
  if (document.lambda) doc["lambda"] = *document.lambda;
  return doc.dump();
}

std::string to_json(const BahncardInstance& instance) {
  return json{{"trips", instance.trips},
              {"B", instance.B},
              {"beta", instance.beta},
              {"T", instance.T}}
      .dump();
}

std::string to_json(const BahncardPrediction& prediction) {
  return json{{"cards", prediction.cards}}.dump();
}

std::string to_json(const TcpInstance& instance) {
  return json{{"d", instance.d}, {"counts", instance.counts}}.dump();
}

std::string to_json(const TcpPrediction& prediction) {
  return json{{"acks", prediction.acks}}.dump();
}

}  // namespace pdla
