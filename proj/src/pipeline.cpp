#include "udp/pipeline.hpp"

#include <stdexcept>

#include "udp/eval.hpp"

namespace udp {

Parser Parser::universal(Direction adp, RankOptions options) {
  return Parser(RuleSet::universal(), DirectionPolicy::universal().with_adp(adp), options);
}

Parser Parser::naive(RankOptions options) {
  return Parser(RuleSet::naive(), DirectionPolicy(), options);
}

DependencyTree Parser::parse(std::span<const Upos> tags) const {
  return decode(rank(tags), policy_, rules_);
}

DependencyTree Parser::parse(const Sentence& sentence) const {
  auto tags = sentence.tags();
  return parse(tags);
}

namespace {

HeadAssignment run_simple(const Sentence& sentence, SystemMode mode, const RuleSet& rules,
                          Side side) {
  return mode == SystemMode::Baseline ? baseline_parse(sentence, rules, side)
                                      : adjacency_parse(sentence, side);
}

long count_correct(const Corpus& gold, const std::vector<DependencyTree>& trees) {
  long correct = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    DependencyTree g = gold_tree(gold[s]);
    for (std::size_t i = 0; i < g.size(); ++i) correct += g.heads[i] == trees[s].heads[i];
  }
  return correct;
}

}  // namespace

ParseOutcome parse_corpus(const Corpus& input, const RunConfig& config) {
  const bool naive = config.pos_source == PosSource::Naive;
  Corpus retagged;
  if (naive) retagged = naive_pos_tag(input);
  const Corpus& working = naive ? retagged : input;

  RuleConfig rc;
  if (config.custom_rules) {
    rc = *config.custom_rules;
  } else if (naive) {
    rc = {RuleSet::naive(), DirectionPolicy()};
  } else {
    rc = {RuleSet::universal(), DirectionPolicy::universal()};
  }

  ParseOutcome out;
  out.adp = estimate_adp_direction(working);
  switch (config.adp) {
    case AdpSetting::Auto: out.adp_used = out.adp.resolved; break;
    case AdpSetting::Left: out.adp_used = Direction::HeadOnLeft; break;
    case AdpSetting::Right: out.adp_used = Direction::HeadOnRight; break;
  }

  RankOptions options;
  options.personalization_weight = config.personalization_weight;
  options.pagerank.teleport = config.teleport;
  if (config.mode == SystemMode::UdpNoPr) options.mode = RankMode::ReadingOrder;

  std::vector<DependencyTree> trees;
  trees.reserve(working.size());
  out.side_used = config.backoff;

  if (config.mode == SystemMode::Udp || config.mode == SystemMode::UdpNoPr) {
    Parser parser(rc.rules, rc.policy.with_adp(out.adp_used), options);
    for (const auto& s : working) trees.push_back(parser.parse(s));
  } else {
    auto run_side = [&](Side side) {
      std::vector<DependencyTree> result;
      result.reserve(working.size());
      for (const auto& s : working) result.push_back(run_simple(s, config.mode, rc.rules, side).tree);
      return result;
    };
    if (config.oracle_direction) {
      auto left = run_side(Side::Left);
      auto right = run_side(Side::Right);
      // Ties keep the right side, the more common winner.
      if (count_correct(input, left) > count_correct(input, right)) {
        trees = std::move(left);
        out.side_used = Side::Left;
      } else {
        trees = std::move(right);
        out.side_used = Side::Right;
      }
    } else {
      trees = run_side(config.backoff);
    }
  }

  const TreeCheck checks = config.mode == SystemMode::Udp || config.mode == SystemMode::UdpNoPr
                               ? TreeCheck::Full
                               : TreeCheck::Structure;
  out.parsed = input;
  for (std::size_t s = 0; s < trees.size(); ++s) {
    assign_predicted(out.parsed[s], trees[s]);
    out.well_formed += is_valid_tree(working[s], trees[s], checks);
  }
  return out;
}

}  // namespace udp
