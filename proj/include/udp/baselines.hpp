#ifndef UDP_BASELINES_HPP_
#define UDP_BASELINES_HPP_

#include <span>

#include "udp/conllu.hpp"
#include "udp/rules.hpp"

namespace udp {

enum class Side { Left, Right };

/// Single-rooted head assignment that need not be a tree. `well_formed` reports structural
/// validity (connected and acyclic); function-word leafness is not part of these systems.
struct HeadAssignment {
  DependencyTree tree;
  bool well_formed = false;
};

/// Closest-head rule baseline: the main predicate takes the root, every other word the
/// nearest word whose tag may head it (ties to the left). Words with no licensed head in the
/// sentence hang off their `backoff` neighbour, or the other one at a sentence edge.
HeadAssignment baseline_parse(std::span<const Upos> tags, const RuleSet& rules, Side backoff);
HeadAssignment baseline_parse(const Sentence& sentence, const RuleSet& rules, Side backoff);

/// Every word depends on its neighbour on `side`; the word without one takes the root.
HeadAssignment adjacency_parse(std::size_t length, Side side);
HeadAssignment adjacency_parse(const Sentence& sentence, Side side);

inline constexpr std::size_t kNaiveFunctionForms = 100;

/// Retags the corpus with FUNCTION for its `function_forms` most frequent forms (ties broken
/// lexicographically, case-sensitive) and CONTENT for everything else.
Corpus naive_pos_tag(const Corpus& corpus, std::size_t function_forms = kNaiveFunctionForms);

}  // namespace udp

#endif  // UDP_BASELINES_HPP_
