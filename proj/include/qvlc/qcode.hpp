#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvlc/codes.hpp"
#include "qvlc/linalg.hpp"

namespace qvlc {

/// Sparse vector in the Fock space of k-ary strings: word -> amplitude.
/// The empty string is the length-0 word. Amplitudes with magnitude at or
/// below kAmplitudePruneEps are dropped by the producing operations.
struct FockVector {
  int k = 2;
  std::map<std::string, Complex> terms;

  double squared_norm() const;
};

/// Isometry sum_i |c(i)><e_i| : basis column i maps to codeword words[i].
struct QuantumEncoder {
  int k = 2;
  Matrix basis; // d orthonormal columns
  ClassicalCode code;

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Quantum source {p_n, |s_n>}; states are the columns.
struct SourceEnsemble {
  Distribution probs;
  Matrix states;

  int dim() const { return static_cast<int>(states.rows()); }
  int size() const { return static_cast<int>(states.cols()); }
};

/// Probability mass per codeword length: l -> <w|Pi_l|w>.
std::map<int, double> length_distribution(const FockVector& w);

QuantumEncoder build_encoder(const Matrix& basis, const ClassicalCode& code);

/// U|s>: term c(i) -> <e_i|s>.
FockVector encode(const QuantumEncoder& enc, const Vector& s);

/// Block map on M states: concatenated words with product amplitudes.
FockVector encode_block(const QuantumEncoder& enc, const std::vector<Vector>& states);

/// Inverse of encode_block. Returns the coefficient tensor over the product
/// basis {|e_{i_1} ... e_{i_M}>}, flattened with the first symbol most
/// significant (index = ((i_1*d + i_2)*d + ...)). Terms that do not parse as
/// exactly M codewords raise UnparsableString.
Vector decode(const QuantumEncoder& enc, const FockVector& w, int M);

/// t-exponential codeword length (1/t) log_k <w|k^{t Lambda}|w>. t = 0 gives
/// the mean length, t = infinity the base length (longest occupied word).
double t_codeword_length(const FockVector& w, double t);

/// (1/t) log_k sum_i <e_i|rho|e_i> k^{t l_i}; the mean at t = 0.
double source_t_avg_length(const QuantumEncoder& enc, const DensityOperator& rho, double t);

/// Largest base length over the ensemble members' codewords.
int source_base_length(const QuantumEncoder& enc, const SourceEnsemble& ensemble);

/// Tr(U^dag k^{-Lambda} U) = sum_i k^{-l_i}; equals the classical Kraft sum.
double quantum_kraft_sum(const QuantumEncoder& enc);

/// sigma = U^dag k^{-Lambda} U / beta with beta the quantum Kraft sum.
struct CodeInducedState {
  DensityOperator sigma;
  double beta;
};
CodeInducedState code_induced_state(const QuantumEncoder& enc);

SourceEnsemble make_ensemble(const Distribution& probs, const Matrix& states);

/// rho = sum_n p_n |s_n><s_n|.
DensityOperator induced_density(const SourceEnsemble& ensemble);

} // namespace qvlc
