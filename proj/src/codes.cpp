#include "qvlc/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <tuple>

#include "qvlc/entropy.hpp"

namespace qvlc {

namespace {

void require_alphabet(int k) {
  if (k < 2 || k > 10) {
    throw DomainError("alphabet size k must be in [2,10], got " + std::to_string(k));
  }
}

double logsumexp(const std::vector<double>& xs) {
  double m = -kPosInfinity;
  for (double x : xs) m = std::max(m, x);
  if (std::isinf(m)) return m; // all terms are -inf (zero weights)
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// Depth of every original symbol in the generalized Huffman tree. Zero-weight
// symbols and padding dummies merge first and end up on the longest words.
std::vector<int> merged_tree_lengths(const RealVector& p, int k, double t) {
  const int d = static_cast<int>(p.size());
  if (d == 1) return {0};

  const int pad = (k - 1 - (d - 1) % (k - 1)) % (k - 1);
  const int total = d + pad;
  const bool log_domain =
      t > kLogDomainThresholdT || t * std::log(static_cast<double>(k)) * total > 600.0;

  std::vector<int> parent(total, -1);
  // (key, tie, node). Ties resolve to the subtree holding the lowest original
  // symbol index; dummies sort after all real symbols.
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  auto key_of = [&](double w) { return log_domain ? (w > 0.0 ? std::log(w) : -kPosInfinity) : w; };
  for (int i = 0; i < total; ++i) {
    const double w = i < d ? p(i) : 0.0;
    heap.emplace(key_of(w), i, i);
  }

  const double log_k = std::log(static_cast<double>(k));
  const double scale = std::pow(static_cast<double>(k), t);
  while (heap.size() > 1) {
    std::vector<double> keys;
    int tie = std::numeric_limits<int>::max();
    std::vector<int> children;
    for (int c = 0; c < k; ++c) {
      auto [key, child_tie, node] = heap.top();
      heap.pop();
      keys.push_back(key);
      tie = std::min(tie, child_tie);
      children.push_back(node);
    }
    const int node = static_cast<int>(parent.size());
    parent.push_back(-1);
    for (int child : children) parent[child] = node;

    double key;
    if (log_domain) {
      key = t * log_k + logsumexp(keys);
    } else {
      key = scale * std::accumulate(keys.begin(), keys.end(), 0.0);
    }
    heap.emplace(key, tie, node);
  }

  std::vector<int> lengths(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int n = i; parent[n] != -1; n = parent[n]) ++lengths[i];
  }
  return lengths;
}

} // namespace

LengthVector ClassicalCode::lengths() const {
  std::vector<int> ls(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) ls[i] = static_cast<int>(words[i].size());
  return make_length_vector(std::move(ls), k);
}

Distribution make_distribution(const RealVector& probs) {
  if (probs.size() == 0) throw InvalidDistribution("empty probability vector");
  RealVector p = probs;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < -kKraftTol || p(i) > 1.0 + kKraftTol) {
      throw InvalidDistribution("probability " + std::to_string(p(i)) + " outside [0,1]");
    }
    p(i) = std::clamp(p(i), 0.0, 1.0);
  }
  const double total = p.sum();
  if (std::abs(total - 1.0) > kTraceTol) {
    throw InvalidDistribution("probabilities sum to " + std::to_string(total));
  }
  return {p};
}

Distribution make_distribution(std::initializer_list<double> probs) {
  return make_distribution(
      Eigen::Map<const RealVector>(probs.begin(), static_cast<int>(probs.size())));
}

LengthVector make_length_vector(std::vector<int> lengths, int k) {
  require_alphabet(k);
  if (lengths.empty()) throw DomainError("empty length vector");
  for (int l : lengths) {
    if (l < 0) throw DomainError("negative codeword length");
    if (l == 0 && lengths.size() > 1) {
      throw KraftViolated("length-0 codeword in a multi-word code");
    }
  }
  LengthVector out{std::move(lengths), k};
  const double sum = kraft_sum(out);
  if (sum > 1.0 + kKraftTol) {
    throw KraftViolated("Kraft sum " + std::to_string(sum) + " exceeds 1");
  }
  return out;
}

ClassicalCode make_code(int k, std::vector<std::string> words) {
  require_alphabet(k);
  if (words.empty()) throw DomainError("empty codebook");
  for (const auto& w : words) {
    for (char c : w) {
      if (c < '0' || c >= '0' + k) {
        throw DomainError("word '" + w + "' uses letters outside the " + std::to_string(k) +
                          "-ary alphabet");
      }
    }
    if (w.empty() && words.size() > 1) {
      throw NotPrefixFree("empty word in a multi-word code");
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i] == words[j]) throw DuplicateCodeword("duplicate word '" + words[i] + "'");
      const auto& a = words[i].size() < words[j].size() ? words[i] : words[j];
      const auto& b = words[i].size() < words[j].size() ? words[j] : words[i];
      if (b.compare(0, a.size(), a) == 0) {
        throw NotPrefixFree("'" + a + "' is a prefix of '" + b + "'");
      }
    }
  }
  return {k, std::move(words)};
}

ClassicalCode huffman(const Distribution& p, int k) { return exp_huffman(p, k, 0.0); }

ClassicalCode exp_huffman(const Distribution& p, int k, double t) {
  return assign_codewords(exp_huffman_lengths(p, k, t));
}

LengthVector exp_huffman_lengths(const Distribution& p, int k, double t) {
  require_alphabet(k);
  if (!(t >= 0.0)) throw DomainError("penalty parameter t must be >= 0");
  return make_length_vector(merged_tree_lengths(p.probs, k, t), k);
}

LengthVector shannon_lengths(const Distribution& p, int k) {
  require_alphabet(k);
  std::vector<int> lengths(p.size());
  for (int i = 0; i < p.size(); ++i) {
    if (p.probs(i) <= kSupportEps) {
      throw ZeroProbabilitySymbol("symbol " + std::to_string(i) + " has probability " +
                                  std::to_string(p.probs(i)));
    }
    lengths[i] = std::max(0, snapped_ceil(-log_base(p.probs(i), k)));
  }
  return make_length_vector(std::move(lengths), k);
}

ClassicalCode assign_codewords(const LengthVector& lengths) {
  const double sum = kraft_sum(lengths);
  if (sum > 1.0 + kKraftTol) {
    throw KraftViolated("Kraft sum " + std::to_string(sum) + " exceeds 1");
  }
  const int d = lengths.size();
  const int k = lengths.k;

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(lengths.lengths[a], a) < std::tie(lengths.lengths[b], b);
  });

  std::vector<std::string> words(d);
  std::uint64_t next = 0;
  int prev_len = lengths.lengths[order[0]];
  for (int idx : order) {
    const int len = lengths.lengths[idx];
    if (len * std::log2(static_cast<double>(k)) > 62.0) {
      throw InstanceTooLarge("codeword length " + std::to_string(len) + " too long to assign");
    }
    for (int step = prev_len; step < len; ++step) next *= static_cast<std::uint64_t>(k);
    prev_len = len;

    std::string word(static_cast<std::size_t>(len), '0');
    std::uint64_t v = next;
    for (int pos = len - 1; pos >= 0; --pos) {
      word[static_cast<std::size_t>(pos)] = static_cast<char>('0' + v % k);
      v /= k;
    }
    words[idx] = word;
    ++next;
  }
  return {k, std::move(words)};
}

double kraft_sum(const LengthVector& lengths) {
  double sum = 0.0;
  for (int l : lengths.lengths) sum += std::pow(static_cast<double>(lengths.k), -l);
  return sum;
}

int default_oracle_cap(const Distribution& p, int k, double t) {
  const int d = p.size();
  int cap = std::max(1, d - 1);
  const RealVector esc = escort_distribution(p.probs, t);
  for (int i = 0; i < esc.size(); ++i) {
    if (esc(i) > kSupportEps) {
      cap = std::max(cap, snapped_ceil(-log_base(esc(i), k)));
    }
  }
  return cap;
}

namespace {

struct OracleSearch {
  const RealVector& p_sorted;   // descending
  int k;
  double t;
  int l_max;
  double log_k;
  std::vector<int> current;
  std::vector<int> best;
  double best_objective = kPosInfinity;
  long visited = 0;

  // Objective is compared through a monotone proxy: the plain sum for t = 0,
  // log-sum-exp of ln p + t l ln k otherwise.
  double objective() const {
    const int d = static_cast<int>(current.size());
    if (t == 0.0) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += p_sorted(i) * current[i];
      return s;
    }
    std::vector<double> xs;
    xs.reserve(current.size());
    for (int i = 0; i < d; ++i) {
      if (p_sorted(i) > 0.0) xs.push_back(std::log(p_sorted(i)) + t * current[i] * log_k);
    }
    return logsumexp(xs);
  }

  void recurse(int pos, int min_len, double kraft_used) {
    const int d = static_cast<int>(current.size());
    if (pos == d) {
      ++visited;
      if (visited > 20'000'000) throw InstanceTooLarge("oracle enumeration exceeded node budget");
      const double obj = objective();
      if (obj < best_objective) {
        best_objective = obj;
        best = current;
      }
      return;
    }
    const int remaining = d - pos - 1;
    for (int len = min_len; len <= l_max; ++len) {
      const double used = kraft_used + std::pow(static_cast<double>(k), -len);
      // Every remaining symbol needs at least k^-l_max of Kraft budget.
      if (used + remaining * std::pow(static_cast<double>(k), -l_max) > 1.0 + kKraftTol) continue;
      current[pos] = len;
      recurse(pos + 1, len, used);
    }
  }
};

} // namespace

LengthVector oracle_optimal_lengths(const Distribution& p, int k, double t, int l_max) {
  require_alphabet(k);
  const int d = p.size();
  if (d > 8) throw InstanceTooLarge("oracle supports d <= 8, got " + std::to_string(d));
  if (d == 1) return make_length_vector({0}, k);
  const int floor_len = snapped_ceil(log_base(static_cast<double>(d), k));
  if (l_max < floor_len) {
    throw DomainError("l_max = " + std::to_string(l_max) + " cannot hold " + std::to_string(d) +
                      " words");
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.probs(a) > p.probs(b); });
  RealVector p_sorted(d);
  for (int i = 0; i < d; ++i) p_sorted(i) = p.probs(order[i]);

  OracleSearch search{p_sorted, k, t, l_max, std::log(static_cast<double>(k)),
                      std::vector<int>(d, 0), {}, kPosInfinity, 0};
  search.recurse(0, 1, 0.0);
  if (search.best.empty()) throw InstanceTooLarge("no Kraft-feasible length vector under cap");

  std::vector<int> lengths(d);
  for (int i = 0; i < d; ++i) lengths[order[i]] = search.best[i];
  return make_length_vector(std::move(lengths), k);
}

double classical_avg_length(const Distribution& p, const LengthVector& lengths, double t) {
  if (p.size() != lengths.size()) {
    throw DimensionMismatch("distribution has " + std::to_string(p.size()) + " symbols, lengths " +
                            std::to_string(lengths.size()));
  }
  if (!(t >= 0.0)) throw DomainError("penalty parameter t must be >= 0");

  if (std::isinf(t)) {
    int base = 0;
    for (int i = 0; i < p.size(); ++i) {
      if (p.probs(i) > kSupportEps) base = std::max(base, lengths.lengths[i]);
    }
    return base;
  }
  if (t == 0.0) {
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) s += p.probs(i) * lengths.lengths[i];
    return s;
  }
  const double log_k = std::log(static_cast<double>(lengths.k));
  std::vector<double> xs;
  xs.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) {
    if (p.probs(i) > 0.0) xs.push_back(std::log(p.probs(i)) + t * lengths.lengths[i] * log_k);
  }
  return logsumexp(xs) / (t * log_k);
}

} // namespace qvlc
