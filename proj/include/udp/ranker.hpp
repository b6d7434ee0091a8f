#ifndef UDP_RANKER_HPP_
#define UDP_RANKER_HPP_

#include <span>
#include <vector>

#include "udp/conllu.hpp"
#include "udp/rules.hpp"

namespace udp {

/// Directed multigraph over the tokens of one sentence. Node i (0-based) is token i + 1;
/// every rule licensing token h to head token d contributes one edge d -> h.
struct SentenceGraph {
  std::vector<std::vector<int>> out_edges;  // targets, repeated for parallel edges
  std::vector<int> in_degree;

  std::size_t node_count() const { return out_edges.size(); }
  std::size_t edge_count() const;
};

SentenceGraph build_graph(std::span<const Upos> tags, const RuleSet& rules);
SentenceGraph build_graph(const Sentence& sentence, const RuleSet& rules);

/// 1-based index of the first VERB, else of the first content word, else 1.
int estimate_main_predicate(std::span<const Upos> tags);
int estimate_main_predicate(const Sentence& sentence);

/// `weight` on the predicate, 1 elsewhere, normalized to sum to one.
std::vector<double> personalization_vector(std::size_t length, int predicate_index,
                                           double weight = 5.0);

struct PageRankOptions {
  double teleport = 0.05;
  double tolerance = 1e-10;  // L1 change between successive iterates
  int max_iterations = 200;
};

/// Personalized PageRank. Dangling nodes hand their mass back through the personalization
/// vector. Throws std::invalid_argument if the personalization is not a distribution or the
/// teleport probability is outside (0, 1).
std::vector<double> pagerank(const SentenceGraph& graph, std::span<const double> personalization,
                             const PageRankOptions& options = {});

enum class RankMode { PageRank, ReadingOrder };

struct RankOptions {
  RankMode mode = RankMode::PageRank;
  double personalization_weight = 5.0;
  PageRankOptions pagerank;
};

/// Scores closer than this are treated as tied and ordered by sentence position.
inline constexpr double kScoreTieTolerance = 1e-12;

struct RankedSentence {
  std::vector<Upos> tags;
  std::vector<double> scores;  // empty in reading-order mode
  std::vector<int> content;    // 1-based, best first
  std::vector<int> function;   // 1-based, sentence order
  int predicate_index = 1;

  std::size_t size() const { return tags.size(); }
};

/// Orders content positions by descending score; near-ties go to the earlier position.
std::vector<int> order_by_score(std::span<const int> positions, std::span<const double> scores);

RankedSentence rank(std::span<const Upos> tags, const RuleSet& rules,
                    const RankOptions& options = {});
RankedSentence rank(const Sentence& sentence, const RuleSet& rules,
                    const RankOptions& options = {});

}  // namespace udp

#endif  // UDP_RANKER_HPP_
