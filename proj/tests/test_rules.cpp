#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "udp/rules.hpp"

using namespace udp;

TEST_CASE("universal rule set is the head-rule table") {
  RuleSet rules = RuleSet::universal();
  // ADJ->ADV, six dependents each for NOUN, PROPN and VERB
  CHECK(rules.size() == 19);
  std::set<std::pair<std::string, std::string>> listed;
  for (auto [h, d] : rules.pairs()) {
    listed.insert({std::string(to_string(h)), std::string(to_string(d))});
    CHECK(is_content(h));
  }
  CHECK(listed == oracle::table_rules());
}

TEST_CASE("delta") {
  RuleSet rules = RuleSet::universal();
  CHECK(delta(Upos::VERB, Upos::NOUN, rules));
  CHECK_FALSE(delta(Upos::NOUN, Upos::VERB, rules));
  CHECK_FALSE(delta(Upos::ADJ, Upos::ADJ, rules));
  CHECK(delta(Upos::ADJ, Upos::ADV, rules));
  for (Upos h : kUniversalTags) {
    if (is_content(h)) continue;
    for (Upos d : kUniversalTags) CHECK_FALSE(delta(h, d, rules));
  }
}

TEST_CASE("kappa") {
  DirectionPolicy policy = DirectionPolicy::universal();
  CHECK(kappa(6, 4, Upos::DET, policy));
  CHECK_FALSE(kappa(3, 4, Upos::DET, policy));
  CHECK_FALSE(kappa(7, 5, Upos::PUNCT, policy));
  CHECK(kappa(3, 5, Upos::PUNCT, policy));
  CHECK(kappa(3, 9, Upos::NOUN, policy));
  CHECK(kappa(12, 9, Upos::NOUN, policy));
  CHECK(kappa(0, 4, Upos::PUNCT, policy));
  CHECK(kappa(0, 4, Upos::DET, policy));
}

TEST_CASE("default direction policy") {
  DirectionPolicy policy = DirectionPolicy::universal();
  for (Upos t : {Upos::AUX, Upos::DET, Upos::SCONJ}) CHECK(policy.of(t) == Direction::HeadOnRight);
  for (Upos t : {Upos::CONJ, Upos::CCONJ, Upos::PUNCT}) CHECK(policy.of(t) == Direction::HeadOnLeft);
  for (Upos t : {Upos::ADP, Upos::NOUN, Upos::PRON, Upos::ADV, Upos::X}) {
    CHECK(policy.of(t) == Direction::Free);
  }
  CHECK(policy.with_adp(Direction::HeadOnLeft).of(Upos::ADP) == Direction::HeadOnLeft);
  CHECK(policy.of(Upos::ADP) == Direction::Free);
}

TEST_CASE("kappa never accepts both sides for a constrained tag") {
  DirectionPolicy right, left;
  right.set(Upos::DET, Direction::HeadOnRight);
  left.set(Upos::DET, Direction::HeadOnLeft);
  for (int h = 1; h <= 12; ++h) {
    for (int d = 1; d <= 12; ++d) {
      if (h == d) continue;
      CHECK_FALSE((kappa(h, d, Upos::DET, right) && kappa(h, d, Upos::DET, left)));
      CHECK((kappa(h, d, Upos::DET, right) || kappa(h, d, Upos::DET, left)));
    }
  }
}

TEST_CASE("content and nominal classes") {
  CHECK(is_content(Upos::VERB));
  CHECK_FALSE(is_content(Upos::PRON));
  CHECK(is_content(Upos::CONTENT));
  CHECK_FALSE(is_content(Upos::FUNCTION));
  CHECK(is_nominal(Upos::PRON));
  CHECK(is_nominal(Upos::PROPN));
  CHECK(is_nominal(Upos::NOUN));
  CHECK_FALSE(is_nominal(Upos::ADJ));
}

TEST_CASE("naive rule set") {
  RuleSet rules = RuleSet::naive();
  CHECK(rules.size() == 2);
  CHECK(delta(Upos::CONTENT, Upos::CONTENT, rules));
  CHECK(delta(Upos::CONTENT, Upos::FUNCTION, rules));
  CHECK_FALSE(delta(Upos::FUNCTION, Upos::CONTENT, rules));
}

TEST_CASE("function-word heads are rejected") {
  RuleSet rules;
  CHECK_THROWS_AS(rules.add(Upos::DET, Upos::NOUN), std::invalid_argument);
}

TEST_CASE("rule file") {
  std::istringstream in(
      "# custom\n"
      "NOUN DET\n"
      "NOUN DET   # listed twice on purpose\n"
      "VERB NOUN\n"
      "DIR DET RIGHT\n"
      "DIR PUNCT LEFT\n");
  RuleConfig config = read_rule_file(in);
  CHECK(config.rules.size() == 3);
  CHECK(config.rules.multiplicity(Upos::NOUN, Upos::DET) == 2);
  CHECK(config.policy.of(Upos::DET) == Direction::HeadOnRight);
  CHECK(config.policy.of(Upos::PUNCT) == Direction::HeadOnLeft);
  CHECK(config.policy.of(Upos::AUX) == Direction::Free);

  std::istringstream bad_tag("NOUN FOO\n");
  CHECK_THROWS_WITH_AS(read_rule_file(bad_tag), doctest::Contains("line 1"), std::runtime_error);
  std::istringstream bad_dir("\nDIR DET UP\n");
  CHECK_THROWS_WITH_AS(read_rule_file(bad_dir), doctest::Contains("line 2"), std::runtime_error);
  std::istringstream function_head("DET NOUN\n");
  CHECK_THROWS_AS(read_rule_file(function_head), std::runtime_error);
}
