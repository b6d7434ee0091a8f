#include "udp/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace udp {

std::size_t SentenceGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& e : out_edges) total += e.size();
  return total;
}

SentenceGraph build_graph(std::span<const Upos> tags, const RuleSet& rules) {
  const std::size_t n = tags.size();
  SentenceGraph g;
  g.out_edges.resize(n);
  g.in_degree.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t h = 0; h < n; ++h) {
      if (h == d) continue;
      int times = rules.multiplicity(tags[h], tags[d]);
      for (int k = 0; k < times; ++k) g.out_edges[d].push_back(static_cast<int>(h));
      g.in_degree[h] += times;
    }
  }
  return g;
}

SentenceGraph build_graph(const Sentence& sentence, const RuleSet& rules) {
  auto tags = sentence.tags();
  return build_graph(tags, rules);
}

int estimate_main_predicate(std::span<const Upos> tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == Upos::VERB) return static_cast<int>(i) + 1;
  }
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (is_content(tags[i])) return static_cast<int>(i) + 1;
  }
  return 1;
}

int estimate_main_predicate(const Sentence& sentence) {
  auto tags = sentence.tags();
  return estimate_main_predicate(tags);
}

std::vector<double> personalization_vector(std::size_t length, int predicate_index,
                                           double weight) {
  if (predicate_index < 1 || static_cast<std::size_t>(predicate_index) > length) {
    throw std::invalid_argument("predicate index outside the sentence");
  }
  if (!(weight > 0.0)) throw std::invalid_argument("personalization weight must be positive");
  std::vector<double> p(length, 1.0);
  p[static_cast<std::size_t>(predicate_index - 1)] = weight;
  const double total = static_cast<double>(length - 1) + weight;
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> pagerank(const SentenceGraph& graph, std::span<const double> personalization,
                             const PageRankOptions& options) {
  const std::size_t n = graph.node_count();
  if (personalization.size() != n) {
    throw std::invalid_argument("personalization length differs from node count");
  }
  if (!(options.teleport > 0.0 && options.teleport < 1.0)) {
    throw std::invalid_argument("teleport probability must lie in (0, 1)");
  }
  double mass = 0.0;
  for (double v : personalization) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument("personalization entries must be non-negative");
    }
    mass += v;
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    throw std::invalid_argument("personalization does not sum to 1");
  }
  if (n == 0) return {};

  const double follow = 1.0 - options.teleport;
  std::vector<double> rank(personalization.begin(), personalization.end());
  std::vector<double> next(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double dangling = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& targets = graph.out_edges[v];
      if (targets.empty()) {
        dangling += rank[v];
        continue;
      }
      const double share = rank[v] / static_cast<double>(targets.size());
      for (int t : targets) next[static_cast<std::size_t>(t)] += share;
    }
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = options.teleport * personalization[v] + follow * (next[v] + dangling * personalization[v]);
      change += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    if (change < options.tolerance) break;
  }
  const double total = std::accumulate(rank.begin(), rank.end(), 0.0);
  for (double& v : rank) v /= total;
  return rank;
}

std::vector<int> order_by_score(std::span<const int> positions, std::span<const double> scores) {
  std::vector<int> order(positions.begin(), positions.end());
  auto score = [&](int pos) { return scores[static_cast<std::size_t>(pos - 1)]; };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score(a) > score(b); });
  // Group runs of near-equal scores around their best member and restore sentence order.
  for (auto first = order.begin(); first != order.end();) {
    const double anchor = score(*first);
    auto last = std::find_if(first, order.end(),
                             [&](int p) { return anchor - score(p) > kScoreTieTolerance; });
    std::sort(first, last);
    first = last;
  }
  return order;
}

RankedSentence rank(std::span<const Upos> tags, const RuleSet& rules,
                    const RankOptions& options) {
  RankedSentence ranked;
  ranked.tags.assign(tags.begin(), tags.end());
  ranked.predicate_index = tags.empty() ? 1 : estimate_main_predicate(tags);

  std::vector<int> content;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    (is_content(tags[i]) ? content : ranked.function).push_back(static_cast<int>(i) + 1);
  }
  if (options.mode == RankMode::ReadingOrder || tags.empty()) {
    ranked.content = std::move(content);
    return ranked;
  }

  auto graph = build_graph(tags, rules);
  auto teleport_to =
      personalization_vector(tags.size(), ranked.predicate_index, options.personalization_weight);
  ranked.scores = pagerank(graph, teleport_to, options.pagerank);
  ranked.content = order_by_score(content, ranked.scores);
  return ranked;
}

RankedSentence rank(const Sentence& sentence, const RuleSet& rules, const RankOptions& options) {
  auto tags = sentence.tags();
  return rank(tags, rules, options);
}

}  // namespace udp
