#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qvlc/qcode.hpp"
#include "qvlc/verify.hpp"

namespace qvlc {

// Matrix JSON: {"dim": d, "entries": [[[re,im], ...], ...]} row-major; a bare
// number is shorthand for [re, 0].
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

// Codebook JSON: {"k": k, "words": ["0","10","11"]}.
ClassicalCode code_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const ClassicalCode& code);

// Fock vector JSON: {"k": 2, "terms": {"0": [re,im], ...}}; "" is the
// length-0 word.
FockVector fock_from_json(const nlohmann::json& j);
nlohmann::json fock_to_json(const FockVector& w);

// Ensemble JSON: {"probs": [...], "states": [[[re,im], ...], ...]}; each state
// is one row of the "states" array.
SourceEnsemble ensemble_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const BoundReport& r);
nlohmann::json reports_to_json(const std::vector<BoundReport>& reports);

/// CSV with header theorem_id,d,k,t,seed,lower,achieved,upper,gap_lower,gap_upper,pass.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

/// Comma-separated reals ("0.5,0.25,0.25") -> vector.
RealVector parse_spectrum(const std::string& text);

std::string read_text_file(const std::string& path); // FileNotFound on failure
nlohmann::json parse_json(const std::string& text);  // MalformedInput on failure

/// "inf" or a non-negative real.
double parse_t(const std::string& text);
std::string format_t(double t);

} // namespace qvlc
