#ifndef UDP_PIPELINE_HPP_
#define UDP_PIPELINE_HPP_

#include <optional>
#include <span>

#include "udp/baselines.hpp"
#include "udp/conllu.hpp"
#include "udp/decoder.hpp"
#include "udp/direction.hpp"
#include "udp/ranker.hpp"
#include "udp/rules.hpp"

namespace udp {

/// Rules, direction policy and ranking options for one run of the parser.
class Parser {
 public:
  Parser(RuleSet rules, DirectionPolicy policy, RankOptions options = {})
      : rules_(std::move(rules)), policy_(policy), options_(options) {}

  /// Universal head rules and function-word directions with ADP attached on `adp`.
  static Parser universal(Direction adp = Direction::HeadOnRight, RankOptions options = {});
  /// Two-tag CONTENT/FUNCTION rules, every direction free.
  static Parser naive(RankOptions options = {});

  RankedSentence rank(std::span<const Upos> tags) const { return udp::rank(tags, rules_, options_); }
  DependencyTree parse(std::span<const Upos> tags) const;
  DependencyTree parse(const Sentence& sentence) const;

  const RuleSet& rules() const { return rules_; }
  const DirectionPolicy& policy() const { return policy_; }
  const RankOptions& options() const { return options_; }

 private:
  RuleSet rules_;
  DirectionPolicy policy_;
  RankOptions options_;
};

enum class SystemMode { Udp, UdpNoPr, Baseline, Adjacency };
enum class PosSource { GoldColumn, Naive };
enum class AdpSetting { Auto, Left, Right };

struct RunConfig {
  SystemMode mode = SystemMode::Udp;
  PosSource pos_source = PosSource::GoldColumn;
  AdpSetting adp = AdpSetting::Auto;
  double teleport = 0.05;
  double personalization_weight = 5.0;
  Side backoff = Side::Right;
  // Baseline and adjacency only: try both sides and keep the one scoring higher on the
  // input's gold heads.
  bool oracle_direction = false;
  std::optional<RuleConfig> custom_rules;
};

struct ParseOutcome {
  Corpus parsed;  // input sentences (original tags) with pred_head filled in
  AdpDirectionEstimate adp;
  Direction adp_used = Direction::HeadOnRight;
  Side side_used = Side::Right;
  long well_formed = 0;  // full validation for udp modes, structural for the baselines
};

/// Estimates the ADP direction over the whole input, then parses each sentence.
ParseOutcome parse_corpus(const Corpus& input, const RunConfig& config);

}  // namespace udp

#endif  // UDP_PIPELINE_HPP_
