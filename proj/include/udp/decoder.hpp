#ifndef UDP_DECODER_HPP_
#define UDP_DECODER_HPP_

#include <span>

#include "udp/conllu.hpp"
#include "udp/ranker.hpp"
#include "udp/rules.hpp"

namespace udp {

/// Picks the closest head in `heads` for token `dependent` (1-based; 0 in `heads` is the root).
///
/// Candidates must satisfy both the direction policy and the head rules; if none do, only the
/// direction policy; if still none, any head qualifies. Equal distances resolve to the smaller
/// index. Throws std::invalid_argument for an empty head set.
int attach(int dependent, std::span<const int> heads, std::span<const Upos> tags,
           const DirectionPolicy& policy, const RuleSet& rules);

/// If the last token is PUNCT, reattaches it to the root dependent.
void apply_final_punct_heuristic(DependencyTree& tree, std::span<const Upos> tags);

/// Two-step decoding: content words in rank order, each joining the head set once attached,
/// then function words against the frozen head set; finally the punctuation heuristic.
DependencyTree decode(const RankedSentence& ranked, const DirectionPolicy& policy,
                      const RuleSet& rules);

}  // namespace udp

#endif  // UDP_DECODER_HPP_
