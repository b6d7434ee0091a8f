#include "udp/decoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace udp {

namespace {

Upos tag_at(std::span<const Upos> tags, int index) {
  return tags[static_cast<std::size_t>(index - 1)];
}

}  // namespace

int attach(int dependent, std::span<const int> heads, std::span<const Upos> tags,
           const DirectionPolicy& policy, const RuleSet& rules) {
  if (heads.empty()) throw std::invalid_argument("attach: empty head set");
  const Upos dep_tag = tag_at(tags, dependent);

  // Back-off levels: 0 = rules and direction, 1 = direction only, 2 = unconstrained.
  for (int level = 0; level < 3; ++level) {
    int best = -1;
    int best_distance = std::numeric_limits<int>::max();
    for (int h : heads) {
      if (h == dependent) continue;
      if (level < 2 && !kappa(h, dependent, dep_tag, policy)) continue;
      if (level < 1 && (h == 0 || !delta(tag_at(tags, h), dep_tag, rules))) continue;
      int distance = std::abs(h - dependent);
      if (distance < best_distance || (distance == best_distance && h < best)) {
        best = h;
        best_distance = distance;
      }
    }
    if (best >= 0) return best;
  }
  throw std::invalid_argument("attach: head set holds only the dependent itself");
}

void apply_final_punct_heuristic(DependencyTree& tree, std::span<const Upos> tags) {
  if (tags.empty() || tags.back() != Upos::PUNCT) return;
  const int last = static_cast<int>(tags.size());
  auto root_dep = std::find(tree.heads.begin(), tree.heads.end(), 0);
  if (root_dep == tree.heads.end()) return;
  const int predicate = static_cast<int>(root_dep - tree.heads.begin()) + 1;
  if (predicate == last) return;
  tree.heads.back() = predicate;
}

DependencyTree decode(const RankedSentence& ranked, const DirectionPolicy& policy,
                      const RuleSet& rules) {
  const std::span<const Upos> tags = ranked.tags;
  DependencyTree tree;
  tree.heads.assign(tags.size(), -1);
  if (tags.empty()) return tree;

  std::vector<int> heads;
  heads.reserve(ranked.content.size() + 1);
  auto set_head = [&](int dependent, int head) {
    tree.heads[static_cast<std::size_t>(dependent - 1)] = head;
  };

  for (int c : ranked.content) {
    set_head(c, heads.empty() ? 0 : attach(c, heads, tags, policy, rules));
    heads.push_back(c);
  }

  int seeded = 0;
  if (heads.empty()) {
    // No content word to carry the sentence: the predicate fallback takes the root.
    seeded = ranked.predicate_index;
    set_head(seeded, 0);
    heads.push_back(seeded);
  }

  for (int f : ranked.function) {
    if (f == seeded) continue;
    set_head(f, attach(f, heads, tags, policy, rules));
  }

  apply_final_punct_heuristic(tree, tags);
  return tree;
}

}  // namespace udp
