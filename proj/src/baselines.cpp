#include "udp/baselines.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "udp/ranker.hpp"

namespace udp {

namespace {

Sentence tagged(std::span<const Upos> tags) {
  Sentence s;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i) + 1;
    t.upos = tags[i];
    s.tokens.push_back(t);
  }
  return s;
}

}  // namespace

HeadAssignment baseline_parse(std::span<const Upos> tags, const RuleSet& rules, Side backoff) {
  const int n = static_cast<int>(tags.size());
  HeadAssignment out;
  out.tree.heads.assign(tags.size(), 0);
  if (n == 0) return out;

  const int predicate = estimate_main_predicate(tags);
  for (int d = 1; d <= n; ++d) {
    if (d == predicate) continue;
    const Upos dep_tag = tags[static_cast<std::size_t>(d - 1)];
    int best = -1;
    int best_distance = std::numeric_limits<int>::max();
    for (int h = 1; h <= n; ++h) {
      if (h == d || !rules.licenses(tags[static_cast<std::size_t>(h - 1)], dep_tag)) continue;
      int distance = std::abs(h - d);
      if (distance < best_distance) {  // scanning left to right keeps the leftmost on ties
        best = h;
        best_distance = distance;
      }
    }
    if (best < 0) {
      bool left = backoff == Side::Left;
      if (d == 1) left = false;
      if (d == n) left = true;
      best = left ? d - 1 : d + 1;
    }
    out.tree.heads[static_cast<std::size_t>(d - 1)] = best;
  }
  out.well_formed = is_valid_tree(tagged(tags), out.tree, TreeCheck::Structure);
  return out;
}

HeadAssignment baseline_parse(const Sentence& sentence, const RuleSet& rules, Side backoff) {
  auto tags = sentence.tags();
  return baseline_parse(tags, rules, backoff);
}

HeadAssignment adjacency_parse(std::size_t length, Side side) {
  HeadAssignment out;
  const int n = static_cast<int>(length);
  out.tree.heads.resize(length);
  for (int i = 1; i <= n; ++i) {
    int head = side == Side::Left ? i - 1 : i + 1;
    if (head > n) head = 0;
    out.tree.heads[static_cast<std::size_t>(i - 1)] = head;
  }
  out.well_formed = n > 0;
  return out;
}

HeadAssignment adjacency_parse(const Sentence& sentence, Side side) {
  return adjacency_parse(sentence.size(), side);
}

Corpus naive_pos_tag(const Corpus& corpus, std::size_t function_forms) {
  std::unordered_map<std::string, long> freq;
  for (const auto& s : corpus) {
    for (const auto& t : s.tokens) ++freq[t.form];
  }
  std::vector<std::pair<std::string, long>> ranked(freq.begin(), freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > function_forms) ranked.resize(function_forms);
  std::unordered_set<std::string> function;
  for (auto& [form, count] : ranked) function.insert(form);

  Corpus out = corpus;
  for (auto& s : out) {
    for (auto& t : s.tokens) {
      t.upos = function.count(t.form) ? Upos::FUNCTION : Upos::CONTENT;
    }
  }
  return out;
}

}  // namespace udp
