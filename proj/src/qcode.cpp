#include "qvlc/qcode.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qvlc {

namespace {

void require_state_dim(const QuantumEncoder& enc, const Vector& s) {
  if (s.size() != enc.dim()) {
    throw DimensionMismatch("state has dimension " + std::to_string(s.size()) +
                            ", encoder expects " + std::to_string(enc.dim()));
  }
}

double logsumexp_pairs(const std::vector<std::pair<double, double>>& prob_len, double t,
                       double log_k) {
  double m = -kPosInfinity;
  for (const auto& [lp, len] : prob_len) m = std::max(m, lp + t * len * log_k);
  double s = 0.0;
  for (const auto& [lp, len] : prob_len) s += std::exp(lp + t * len * log_k - m);
  return m + std::log(s);
}

} // namespace

double FockVector::squared_norm() const {
  double n = 0.0;
  for (const auto& [word, amp] : terms) n += std::norm(amp);
  return n;
}

std::map<int, double> length_distribution(const FockVector& w) {
  std::map<int, double> dist;
  for (const auto& [word, amp] : w.terms) dist[static_cast<int>(word.size())] += std::norm(amp);
  return dist;
}

QuantumEncoder build_encoder(const Matrix& basis, const ClassicalCode& code) {
  if (basis.rows() != basis.cols()) {
    throw DimensionMismatch("encoder basis must be square");
  }
  if (basis.cols() != code.size()) {
    throw DimensionMismatch("basis has " + std::to_string(basis.cols()) + " vectors, code has " +
                            std::to_string(code.size()) + " words");
  }
  const Matrix gram = basis.adjoint() * basis;
  const double defect =
      (gram - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-9) {
    throw NonOrthonormalBasis("basis Gram defect " + std::to_string(defect));
  }
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      if (code.words[i] == code.words[j]) {
        throw DuplicateCodeword("codeword '" + code.words[i] + "' appears twice");
      }
    }
  }
  return {code.k, basis, code};
}

FockVector encode(const QuantumEncoder& enc, const Vector& s) {
  require_state_dim(enc, s);
  FockVector w;
  w.k = enc.k;
  const Vector coeffs = enc.basis.adjoint() * s;
  for (int i = 0; i < coeffs.size(); ++i) {
    if (std::abs(coeffs(i)) > kAmplitudePruneEps) w.terms[enc.code.words[i]] = coeffs(i);
  }
  return w;
}

FockVector encode_block(const QuantumEncoder& enc, const std::vector<Vector>& states) {
  if (states.empty()) throw DimensionMismatch("block encoding needs at least one state");
  std::map<std::string, Complex> acc{{"", Complex(1.0, 0.0)}};
  for (const Vector& s : states) {
    require_state_dim(enc, s);
    const Vector coeffs = enc.basis.adjoint() * s;
    std::map<std::string, Complex> next;
    for (const auto& [prefix, amp] : acc) {
      for (int i = 0; i < coeffs.size(); ++i) {
        const Complex a = amp * coeffs(i);
        if (std::abs(a) > kAmplitudePruneEps) next[prefix + enc.code.words[i]] += a;
      }
    }
    acc = std::move(next);
  }
  FockVector w;
  w.k = enc.k;
  w.terms = std::move(acc);
  return w;
}

Vector decode(const QuantumEncoder& enc, const FockVector& w, int M) {
  if (M < 1) throw DimensionMismatch("block size M must be >= 1");
  const int d = enc.dim();

  std::unordered_map<std::string, int> index_of;
  for (int i = 0; i < d; ++i) index_of.emplace(enc.code.words[i], i);
  std::vector<int> word_lengths;
  for (const auto& word : enc.code.words) word_lengths.push_back(static_cast<int>(word.size()));
  std::sort(word_lengths.begin(), word_lengths.end());
  word_lengths.erase(std::unique(word_lengths.begin(), word_lengths.end()), word_lengths.end());

  double cells = 1.0;
  for (int m = 0; m < M; ++m) cells *= d;
  if (cells > 1e6) throw InstanceTooLarge("product basis of size d^M exceeds 1e6");
  Vector coeffs = Vector::Zero(static_cast<int>(cells));

  for (const auto& [word, amp] : w.terms) {
    std::size_t pos = 0;
    long flat = 0;
    for (int m = 0; m < M; ++m) {
      // Prefix-free: at most one codeword can match here.
      int symbol = -1;
      for (int len : word_lengths) {
        if (pos + static_cast<std::size_t>(len) > word.size()) break;
        auto it = index_of.find(word.substr(pos, static_cast<std::size_t>(len)));
        if (it != index_of.end()) {
          symbol = it->second;
          pos += static_cast<std::size_t>(len);
          break;
        }
      }
      if (symbol < 0) {
        throw UnparsableString("'" + word + "' is not a concatenation of " + std::to_string(M) +
                               " codewords");
      }
      flat = flat * d + symbol;
    }
    if (pos != word.size()) {
      throw UnparsableString("'" + word + "' has trailing letters after " + std::to_string(M) +
                             " codewords");
    }
    coeffs(flat) += amp;
  }
  return coeffs;
}

double t_codeword_length(const FockVector& w, double t) {
  if (!(t >= 0.0)) throw DomainError("penalty parameter t must be >= 0");
  const std::map<int, double> dist = length_distribution(w);

  if (std::isinf(t)) {
    int base = 0;
    for (const auto& [len, prob] : dist) {
      if (prob > kAmplitudePruneEps * kAmplitudePruneEps) base = std::max(base, len);
    }
    return base;
  }
  if (t == 0.0) {
    double mean = 0.0;
    for (const auto& [len, prob] : dist) mean += prob * len;
    return mean;
  }
  const double log_k = std::log(static_cast<double>(w.k));
  std::vector<std::pair<double, double>> prob_len;
  for (const auto& [len, prob] : dist) {
    if (prob > 0.0) prob_len.emplace_back(std::log(prob), static_cast<double>(len));
  }
  return logsumexp_pairs(prob_len, t, log_k) / (t * log_k);
}

double source_t_avg_length(const QuantumEncoder& enc, const DensityOperator& rho, double t) {
  if (rho.dim() != enc.dim()) {
    throw DimensionMismatch("source dimension " + std::to_string(rho.dim()) +
                            " does not match encoder dimension " + std::to_string(enc.dim()));
  }
  const Matrix in_basis = enc.basis.adjoint() * rho.matrix * enc.basis;
  RealVector q(enc.dim());
  for (int i = 0; i < enc.dim(); ++i) q(i) = std::max(0.0, in_basis(i, i).real());
  // Diagonal coefficients of a unit-trace operator; renormalize rounding dust.
  q /= q.sum();
  return classical_avg_length({q}, enc.code.lengths(), t);
}

int source_base_length(const QuantumEncoder& enc, const SourceEnsemble& ensemble) {
  int base = 0;
  for (int n = 0; n < ensemble.size(); ++n) {
    const FockVector w = encode(enc, ensemble.states.col(n));
    base = std::max(base, static_cast<int>(std::lround(t_codeword_length(w, kPosInfinity))));
  }
  return base;
}

double quantum_kraft_sum(const QuantumEncoder& enc) { return kraft_sum(enc.code.lengths()); }

CodeInducedState code_induced_state(const QuantumEncoder& enc) {
  const LengthVector lengths = enc.code.lengths();
  const double beta = kraft_sum(lengths);
  RealVector diag(enc.dim());
  for (int i = 0; i < enc.dim(); ++i) {
    diag(i) = std::pow(static_cast<double>(enc.k), -lengths.lengths[i]) / beta;
  }
  DensityOperator sigma;
  sigma.matrix = enc.basis * diag.asDiagonal() * enc.basis.adjoint();
  return {sigma, beta};
}

SourceEnsemble make_ensemble(const Distribution& probs, const Matrix& states) {
  if (states.cols() != probs.size()) {
    throw DimensionMismatch("ensemble has " + std::to_string(states.cols()) + " states and " +
                            std::to_string(probs.size()) + " probabilities");
  }
  for (int n = 0; n < states.cols(); ++n) {
    const double norm = states.col(n).norm();
    if (std::abs(norm - 1.0) > 1e-9) {
      throw DomainError("ensemble state " + std::to_string(n) + " has norm " +
                        std::to_string(norm));
    }
  }
  return {probs, states};
}

DensityOperator induced_density(const SourceEnsemble& ensemble) {
  Matrix rho = Matrix::Zero(ensemble.dim(), ensemble.dim());
  for (int n = 0; n < ensemble.size(); ++n) {
    rho += ensemble.probs.probs(n) * ensemble.states.col(n) * ensemble.states.col(n).adjoint();
  }
  return validate_density(rho);
}

} // namespace qvlc
