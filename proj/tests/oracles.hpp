// Test-only reference computations. Nothing here calls into the library's ranking,
// decoding or scoring code paths; they are the independent side of each check.
#ifndef UDP_TESTS_ORACLES_HPP_
#define UDP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "udp/conllu.hpp"
#include "udp/pos.hpp"

namespace udp::oracle {

// The head rules written out as strings, independent of RuleSet.
inline const std::set<std::pair<std::string, std::string>>& table_rules() {
  static const std::set<std::pair<std::string, std::string>> rules = [] {
    std::set<std::pair<std::string, std::string>> r{{"ADJ", "ADV"}};
    for (const char* h : {"NOUN", "PROPN"}) {
      for (const char* d : {"ADJ", "NOUN", "PROPN", "ADP", "DET", "NUM"}) r.insert({h, d});
    }
    for (const char* d : {"ADV", "AUX", "NOUN", "PROPN", "PRON", "SCONJ"}) r.insert({"VERB", d});
    return r;
  }();
  return rules;
}

// Row-stochastic dense transition matrix with dangling rows replaced by `teleport_to`,
// iterated to a fixed point far below the library's stopping rule.
inline std::vector<double> dense_pagerank(const std::vector<std::string>& tags,
                                          const std::vector<double>& teleport_to,
                                          double teleport, int iterations = 20000) {
  const std::size_t n = tags.size();
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t h = 0; h < n; ++h) {
      if (h != d && table_rules().count({tags[h], tags[d]})) adj[d][h] = 1.0;
    }
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    double out = 0.0;
    for (double v : adj[i]) out += v;
    for (std::size_t j = 0; j < n; ++j) {
      double walk = out > 0 ? adj[i][j] / out : teleport_to[j];
      m[i][j] = teleport * teleport_to[j] + (1.0 - teleport) * walk;
    }
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * m[i][j];
    }
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) diff += std::abs(y[j] - x[j]);
    x = y;
    if (diff < 1e-15) break;
  }
  return x;
}

inline std::vector<double> predicate_weights(std::size_t n, std::size_t predicate_pos,
                                             double weight) {
  std::vector<double> w(n, 1.0);
  w[predicate_pos] = weight;
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

inline std::vector<Upos> random_tags(std::mt19937& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> tag(0, kUniversalTags.size() - 1);
  std::vector<Upos> tags(static_cast<std::size_t>(len(rng)));
  for (auto& t : tags) t = kUniversalTags[tag(rng)];
  return tags;
}

inline Sentence sentence_from_tags(const std::vector<Upos>& tags) {
  Sentence s;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i) + 1;
    t.form = "w" + std::to_string(i + 1);
    t.upos = tags[i];
    s.tokens.push_back(t);
  }
  return s;
}

// Brute-force attachment scoring with plain loops over head columns.
struct BruteScore {
  long correct = 0;
  long total = 0;
  std::map<Upos, std::pair<long, long>> per_pos;
  long root_hits = 0;
};

inline BruteScore brute_uas(const std::vector<std::vector<Upos>>& tags,
                            const std::vector<std::vector<int>>& gold,
                            const std::vector<std::vector<int>>& pred) {
  BruteScore b;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    int g_root = -1, p_root = -1;
    for (std::size_t i = 0; i < gold[s].size(); ++i) {
      bool ok = gold[s][i] == pred[s][i];
      b.correct += ok;
      b.total += 1;
      auto& cell = b.per_pos[tags[s][i]];
      cell.first += ok;
      cell.second += 1;
      if (gold[s][i] == 0 && g_root < 0) g_root = static_cast<int>(i);
      if (pred[s][i] == 0 && p_root < 0) p_root = static_cast<int>(i);
    }
    b.root_hits += (g_root >= 0 && g_root == p_root);
  }
  return b;
}

}  // namespace udp::oracle

#endif  // UDP_TESTS_ORACLES_HPP_
