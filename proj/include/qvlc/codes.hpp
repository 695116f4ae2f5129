#pragma once

#include <string>
#include <vector>

#include "qvlc/errors.hpp"
#include "qvlc/types.hpp"

namespace qvlc {

/// Probability vector over d source symbols.
struct Distribution {
  RealVector probs;

  int size() const { return static_cast<int>(probs.size()); }
};

/// Integer codeword lengths for a k-ary alphabet. Valid instances satisfy
/// the Kraft inequality sum k^{-l_i} <= 1 (within kKraftTol).
struct LengthVector {
  std::vector<int> lengths;
  int k = 2;

  int size() const { return static_cast<int>(lengths.size()); }
};

/// Prefix-free k-ary code; words are digit strings over {0,...,k-1}.
struct ClassicalCode {
  int k = 2;
  std::vector<std::string> words;

  int size() const { return static_cast<int>(words.size()); }
  LengthVector lengths() const;
};

Distribution make_distribution(const RealVector& probs);
Distribution make_distribution(std::initializer_list<double> probs);

/// Validates the Kraft inequality (throws KraftViolated) and the digit
/// alphabet bound 2 <= k <= 10.
LengthVector make_length_vector(std::vector<int> lengths, int k);

/// Validates prefix-freeness; a length-0 word is allowed only for a
/// one-word code. Throws DuplicateCodeword / NotPrefixFree.
ClassicalCode make_code(int k, std::vector<std::string> words);

/// Prefix-free code minimizing the mean length sum p_i l_i.
ClassicalCode huffman(const Distribution& p, int k);

/// Prefix-free code minimizing the exponential mean (1/t) log_k sum p_i k^{t l_i}.
/// Merge rule: the k lightest subtrees combine into a parent of weight
/// k^t * (sum of child weights); t = 0 reduces to plain Huffman. Weights move
/// to log domain above kLogDomainThresholdT to avoid overflow.
ClassicalCode exp_huffman(const Distribution& p, int k, double t);

/// The length vector of exp_huffman without materializing words; used when
/// only lengths matter (large block spectra).
LengthVector exp_huffman_lengths(const Distribution& p, int k, double t);

/// l_i = ceil(-log_k p_i). All probabilities must exceed kSupportEps.
LengthVector shannon_lengths(const Distribution& p, int k);

/// Deterministic Kraft-tree assignment: symbols sorted by (length, index)
/// receive the lexicographically smallest unused word of their length.
ClassicalCode assign_codewords(const LengthVector& lengths);

/// sum_i k^{-l_i}.
double kraft_sum(const LengthVector& lengths);

/// Exhaustive minimizer of sum p_i k^{t l_i} (t = 0: sum p_i l_i) over all
/// Kraft-feasible integer length vectors with 1 <= l_i <= l_max (0 only when
/// d = 1). Ties resolve to the lexicographically smallest sorted vector.
/// Only intended for d <= 8.
LengthVector oracle_optimal_lengths(const Distribution& p, int k, double t, int l_max);

/// Search cap that provably contains an optimum: max of d-1 and the largest
/// Shannon length of the escort of p.
int default_oracle_cap(const Distribution& p, int k, double t);

/// (1/t) log_k sum p_i k^{t l_i}; the linear mean at t = 0. Accepts t =
/// infinity (largest length carrying probability above kSupportEps).
double classical_avg_length(const Distribution& p, const LengthVector& lengths, double t);

} // namespace qvlc
