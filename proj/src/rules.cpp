#include "udp/rules.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace udp {

bool is_content(Upos tag) {
  switch (tag) {
    case Upos::ADJ:
    case Upos::NOUN:
    case Upos::PROPN:
    case Upos::VERB:
    case Upos::CONTENT:
      return true;
    default:
      return false;
  }
}

bool is_nominal(Upos tag) {
  return tag == Upos::NOUN || tag == Upos::PROPN || tag == Upos::PRON;
}

RuleSet RuleSet::universal() {
  RuleSet r;
  r.add(Upos::ADJ, Upos::ADV);
  for (Upos head : {Upos::NOUN, Upos::PROPN}) {
    for (Upos dep : {Upos::ADJ, Upos::NOUN, Upos::PROPN, Upos::ADP, Upos::DET, Upos::NUM}) {
      r.add(head, dep);
    }
  }
  for (Upos dep : {Upos::ADV, Upos::AUX, Upos::NOUN, Upos::PROPN, Upos::PRON, Upos::SCONJ}) {
    r.add(Upos::VERB, dep);
  }
  return r;
}

RuleSet RuleSet::naive() {
  RuleSet r;
  r.add(Upos::CONTENT, Upos::CONTENT);
  r.add(Upos::CONTENT, Upos::FUNCTION);
  return r;
}

void RuleSet::add(Upos head, Upos dependent) {
  if (!is_content(head)) {
    throw std::invalid_argument("rule head must be a content tag, got " +
                                std::string(to_string(head)));
  }
  pairs_.emplace_back(head, dependent);
  ++counts_[index_of(head)][index_of(dependent)];
}

bool RuleSet::covers_dependent(Upos dependent) const {
  for (const auto& row : counts_) {
    if (row[index_of(dependent)] > 0) return true;
  }
  return false;
}

bool delta(Upos head, Upos dependent, const RuleSet& rules) {
  return rules.licenses(head, dependent);
}

DirectionPolicy DirectionPolicy::universal() {
  DirectionPolicy p;
  p.set(Upos::AUX, Direction::HeadOnRight);
  p.set(Upos::DET, Direction::HeadOnRight);
  p.set(Upos::SCONJ, Direction::HeadOnRight);
  p.set(Upos::CONJ, Direction::HeadOnLeft);
  p.set(Upos::CCONJ, Direction::HeadOnLeft);
  p.set(Upos::PUNCT, Direction::HeadOnLeft);
  return p;
}

bool kappa(int head_index, int dependent_index, Upos dependent_upos,
           const DirectionPolicy& policy) {
  if (head_index == 0) return true;
  switch (policy.of(dependent_upos)) {
    case Direction::HeadOnRight:
      return head_index > dependent_index;
    case Direction::HeadOnLeft:
      return head_index < dependent_index;
    case Direction::Free:
      return true;
  }
  return true;
}

namespace {

Upos tag_or_throw(const std::string& name, int line_no) {
  auto tag = parse_upos(name);
  if (!tag) {
    throw std::runtime_error("rule file line " + std::to_string(line_no) + ": unknown tag '" +
                             name + "'");
  }
  return *tag;
}

}  // namespace

RuleConfig read_rule_file(std::istream& in) {
  RuleConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;

    if (words[0] == "DIR") {
      if (words.size() != 3) {
        throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                 ": expected 'DIR TAG LEFT|RIGHT|FREE'");
      }
      Upos tag = tag_or_throw(words[1], line_no);
      if (words[2] == "LEFT") {
        config.policy.set(tag, Direction::HeadOnLeft);
      } else if (words[2] == "RIGHT") {
        config.policy.set(tag, Direction::HeadOnRight);
      } else if (words[2] == "FREE") {
        config.policy.set(tag, Direction::Free);
      } else {
        throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                 ": direction must be LEFT, RIGHT or FREE");
      }
    } else if (words.size() == 2) {
      Upos head = tag_or_throw(words[0], line_no);
      Upos dep = tag_or_throw(words[1], line_no);
      try {
        config.rules.add(head, dep);
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("rule file line " + std::to_string(line_no) + ": " + e.what());
      }
    } else {
      throw std::runtime_error("rule file line " + std::to_string(line_no) +
                               ": expected 'HEAD DEP'");
    }
  }
  return config;
}

}  // namespace udp
