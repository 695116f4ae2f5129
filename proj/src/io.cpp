#include "qvlc/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qvlc {

namespace {

using nlohmann::json;

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw MalformedInput("expected a real number or [re, im] pair, got " + j.dump());
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string csv_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

} // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw MalformedInput("matrix JSON needs \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer()) throw MalformedInput("\"dim\" must be an integer");
  const int d = j["dim"].get<int>();
  if (d < 1) throw MalformedInput("\"dim\" must be >= 1");
  const json& rows = j["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw MalformedInput("\"entries\" must hold exactly dim rows");
  }
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw MalformedInput("row " + std::to_string(i) + " must hold exactly dim entries");
    }
    for (int c = 0; c < d; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ClassicalCode code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("words")) {
    throw MalformedInput("codebook JSON needs \"k\" and \"words\"");
  }
  if (!j["k"].is_number_integer()) throw MalformedInput("\"k\" must be an integer");
  if (!j["words"].is_array()) throw MalformedInput("\"words\" must be an array");
  std::vector<std::string> words;
  for (const auto& w : j["words"]) {
    if (!w.is_string()) throw MalformedInput("codebook words must be strings");
    words.push_back(w.get<std::string>());
  }
  try {
    return make_code(j["k"].get<int>(), std::move(words));
  } catch (const Error& e) {
    throw MalformedInput(std::string("invalid codebook: ") + e.what());
  }
}

json code_to_json(const ClassicalCode& code) {
  return json{{"k", code.k}, {"words", code.words}};
}

FockVector fock_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("terms")) {
    throw MalformedInput("Fock vector JSON needs \"k\" and \"terms\"");
  }
  if (!j["terms"].is_object()) throw MalformedInput("\"terms\" must be an object");
  FockVector w;
  w.k = j["k"].get<int>();
  for (const auto& [word, amp] : j["terms"].items()) {
    const Complex a = complex_from_json(amp);
    if (std::abs(a) > kAmplitudePruneEps) w.terms[word] = a;
  }
  return w;
}

json fock_to_json(const FockVector& w) {
  json terms = json::object();
  for (const auto& [word, amp] : w.terms) terms[word] = complex_to_json(amp);
  return json{{"k", w.k}, {"terms", std::move(terms)}};
}

SourceEnsemble ensemble_from_json(const json& j) {
  if (!j.is_object() || !j.contains("probs") || !j.contains("states")) {
    throw MalformedInput("ensemble JSON needs \"probs\" and \"states\"");
  }
  const json& jp = j["probs"];
  const json& js = j["states"];
  if (!jp.is_array() || !js.is_array() || jp.size() != js.size() || jp.empty()) {
    throw MalformedInput("\"probs\" and \"states\" must be equal-length non-empty arrays");
  }
  std::vector<double> probs;
  for (const auto& p : jp) {
    if (!p.is_number()) throw MalformedInput("probabilities must be numbers");
    probs.push_back(p.get<double>());
  }
  const json& first = js[0];
  if (!first.is_array() || first.empty()) throw MalformedInput("states must be non-empty arrays");
  const int d = static_cast<int>(first.size());
  Matrix states(d, static_cast<int>(js.size()));
  for (std::size_t n = 0; n < js.size(); ++n) {
    const json& state = js[n];
    if (!state.is_array() || static_cast<int>(state.size()) != d) {
      throw MalformedInput("state " + std::to_string(n) + " has inconsistent dimension");
    }
    for (int i = 0; i < d; ++i) {
      states(i, static_cast<int>(n)) = complex_from_json(state[static_cast<std::size_t>(i)]);
    }
  }
  try {
    const Eigen::Map<const RealVector> p(probs.data(), static_cast<int>(probs.size()));
    return make_ensemble(make_distribution(p), states);
  } catch (const Error& e) {
    throw MalformedInput(std::string("invalid ensemble: ") + e.what());
  }
}

json report_to_json(const BoundReport& r) {
  json j{{"theorem_id", r.theorem_id},
         {"d", r.params.d},
         {"k", r.params.k},
         {"t", std::isinf(r.params.t) ? json("inf") : json(r.params.t)},
         {"seed", r.params.seed},
         {"lower", r.lower},
         {"achieved", r.achieved},
         {"upper", r.upper},
         {"gap_lower", r.gap_lower},
         {"gap_upper", r.gap_upper},
         {"lower_ok", r.lower_ok},
         {"upper_ok", r.upper_ok},
         {"pass", r.pass()}};
  if (r.base_length >= 0) j["base_length"] = r.base_length;
  return j;
}

json reports_to_json(const std::vector<BoundReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "theorem_id,d,k,t,seed,lower,achieved,upper,gap_lower,gap_upper,pass\n";
  for (const auto& r : reports) {
    os << r.theorem_id << ',' << r.params.d << ',' << r.params.k << ',' << format_t(r.params.t)
       << ',' << r.params.seed << ',' << csv_double(r.lower) << ',' << csv_double(r.achieved)
       << ',' << csv_double(r.upper) << ',' << csv_double(r.gap_lower) << ','
       << csv_double(r.gap_upper) << ',' << (r.pass() ? 1 : 0) << '\n';
  }
  return os.str();
}

RealVector parse_spectrum(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const auto begin = token.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw MalformedInput("empty entry in spectrum list");
    const auto end = token.find_last_not_of(" \t\r\n");
    token = token.substr(begin, end - begin + 1);
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw MalformedInput("'" + token + "' is not a real number");
    }
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (values.empty()) throw MalformedInput("empty spectrum");
  return Eigen::Map<const RealVector>(values.data(), static_cast<int>(values.size()));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedInput("invalid JSON");
  return j;
}

double parse_t(const std::string& text) {
  if (text == "inf" || text == "infinity") return kPosInfinity;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError("'" + text + "' is not a real number or 'inf'");
  }
  if (!(value >= 0.0)) throw UsageError("t must be >= 0");
  return value;
}

std::string format_t(double t) {
  if (std::isinf(t)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

} // namespace qvlc
