#ifndef UDP_RULES_HPP_
#define UDP_RULES_HPP_

#include <array>
#include <istream>
#include <utility>
#include <vector>

#include "udp/pos.hpp"

namespace udp {

/// Content words can head other words: ADJ, NOUN, PROPN, VERB and the synthetic CONTENT tag.
bool is_content(Upos tag);

/// Nominals for adposition direction counting: NOUN, PROPN, PRON.
bool is_nominal(Upos tag);

/// Head-dependent licensing relation over POS tags.
///
/// Pairs are kept with multiplicity: a pair listed twice yields two parallel
/// edges in the ranking graph.
class RuleSet {
 public:
  RuleSet() = default;

  /// The 14 head rules of the UD rule table.
  static RuleSet universal();
  /// CONTENT -> {CONTENT, FUNCTION}, used with naive two-tag input.
  static RuleSet naive();

  /// Throws std::invalid_argument if the head is not a content tag.
  void add(Upos head, Upos dependent);

  bool licenses(Upos head, Upos dependent) const { return multiplicity(head, dependent) > 0; }
  int multiplicity(Upos head, Upos dependent) const {
    return counts_[index_of(head)][index_of(dependent)];
  }
  /// True if any rule lists the tag as a dependent.
  bool covers_dependent(Upos dependent) const;

  const std::vector<std::pair<Upos, Upos>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<std::pair<Upos, Upos>> pairs_;
  std::array<std::array<int, kUposCount>, kUposCount> counts_{};
};

bool delta(Upos head, Upos dependent, const RuleSet& rules);

enum class Direction { HeadOnRight, HeadOnLeft, Free };

/// Per-tag constraint on which side of a dependent its head may lie.
class DirectionPolicy {
 public:
  /// Every tag Free.
  DirectionPolicy() { sides_.fill(Direction::Free); }

  /// AUX, DET, SCONJ head on the right; CONJ (and CCONJ), PUNCT head on the left.
  static DirectionPolicy universal();

  Direction of(Upos tag) const { return sides_[index_of(tag)]; }
  void set(Upos tag, Direction side) { sides_[index_of(tag)] = side; }

  DirectionPolicy with_adp(Direction side) const {
    DirectionPolicy copy = *this;
    copy.set(Upos::ADP, side);
    return copy;
  }

 private:
  std::array<Direction, kUposCount> sides_;
};

/// Direction check for attaching `dependent_index` to `head_index` (1-based; 0 is the root,
/// which always satisfies it).
bool kappa(int head_index, int dependent_index, Upos dependent_upos,
           const DirectionPolicy& policy);

struct RuleConfig {
  RuleSet rules;
  DirectionPolicy policy;
};

/// Reads a rule file: `HEAD DEP` lines add head rules, `DIR TAG LEFT|RIGHT|FREE` lines set
/// the side of the head for TAG, `#` starts a comment. Unlisted tags are Free.
/// Throws std::runtime_error naming the offending line.
RuleConfig read_rule_file(std::istream& in);

}  // namespace udp

#endif  // UDP_RULES_HPP_
