#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "udp/decoder.hpp"
#include "udp/direction.hpp"
#include "udp/ranker.hpp"

using namespace udp;

namespace {

Corpus corpus_of(const std::vector<std::vector<Upos>>& sentences) {
  Corpus c;
  for (const auto& tags : sentences) c.push_back(oracle::sentence_from_tags(tags));
  return c;
}

// Recount by scanning tag names pairwise.
std::pair<long, long> recount(const Corpus& corpus) {
  long pre = 0, post = 0;
  auto nominal = [](const std::string& t) { return t == "NOUN" || t == "PROPN" || t == "PRON"; };
  for (const auto& s : corpus) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      std::string a(to_string(s.tokens[i].upos)), b(to_string(s.tokens[i + 1].upos));
      pre += a == "ADP" && nominal(b);
      post += nominal(a) && b == "ADP";
    }
  }
  return {pre, post};
}

}  // namespace

TEST_CASE("single-bigram corpora") {
  auto pre = estimate_adp_direction(corpus_of({{Upos::ADP, Upos::PRON, Upos::VERB}}));
  CHECK(pre.adp_nominal_count == 1);
  CHECK(pre.nominal_adp_count == 0);
  CHECK(pre.resolved == Direction::HeadOnRight);

  auto post = estimate_adp_direction(corpus_of({{Upos::NOUN, Upos::ADP, Upos::VERB}}));
  CHECK(post.adp_nominal_count == 0);
  CHECK(post.nominal_adp_count == 1);
  CHECK(post.resolved == Direction::HeadOnLeft);
}

TEST_CASE("twenty-sentence corpus with 12 prepositional and 5 postpositional bigrams") {
  std::vector<std::vector<Upos>> sentences(20, {Upos::VERB});
  for (int k = 0; k < 12; ++k) {
    auto& s = sentences[static_cast<std::size_t>(k)];
    s.insert(s.end(), {Upos::ADP, k % 3 == 0 ? Upos::PROPN : Upos::NOUN, Upos::VERB});
  }
  for (int k = 0; k < 5; ++k) {
    auto& s = sentences[static_cast<std::size_t>(12 + k)];
    s.insert(s.end(), {Upos::PRON, Upos::ADP, Upos::VERB});
  }
  Corpus corpus = corpus_of(sentences);
  CHECK(recount(corpus) == std::pair<long, long>{12, 5});
  auto est = estimate_adp_direction(corpus);
  CHECK(est.adp_nominal_count == 12);
  CHECK(est.nominal_adp_count == 5);
  CHECK(est.resolved == Direction::HeadOnRight);
}

TEST_CASE("ties and empty corpora resolve to prepositions") {
  CHECK(estimate_adp_direction(Corpus{}).resolved == Direction::HeadOnRight);
  auto none = estimate_adp_direction(corpus_of({{Upos::NOUN, Upos::VERB}}));
  CHECK(none.adp_nominal_count == 0);
  CHECK(none.resolved == Direction::HeadOnRight);
  auto tie = estimate_adp_direction(corpus_of({{Upos::NOUN, Upos::ADP, Upos::NOUN}}));
  CHECK(tie.adp_nominal_count == 1);
  CHECK(tie.nominal_adp_count == 1);
  CHECK(tie.resolved == Direction::HeadOnRight);
}

TEST_CASE("bigrams do not cross sentence boundaries") {
  auto est = estimate_adp_direction(corpus_of({{Upos::VERB, Upos::ADP}, {Upos::NOUN, Upos::VERB}}));
  CHECK(est.adp_nominal_count == 0);
  CHECK(est.nominal_adp_count == 0);
}

TEST_CASE("counts match a recount, ignore corpus order, and flip when bigrams are swapped") {
  std::mt19937 rng(99);
  const std::vector<Upos> pool = {Upos::ADP, Upos::NOUN, Upos::PRON, Upos::PROPN, Upos::VERB,
                                  Upos::DET, Upos::ADJ};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<Upos>> sentences;
    int count = std::uniform_int_distribution<int>(0, 15)(rng);
    for (int s = 0; s < count; ++s) {
      std::vector<Upos> tags(std::uniform_int_distribution<std::size_t>(1, 12)(rng));
      for (auto& t : tags) t = pool[rng() % pool.size()];
      sentences.push_back(tags);
    }
    Corpus corpus = corpus_of(sentences);
    auto est = estimate_adp_direction(corpus);
    CHECK(std::pair<long, long>{est.adp_nominal_count, est.nominal_adp_count} == recount(corpus));

    std::shuffle(corpus.begin(), corpus.end(), rng);
    auto shuffled = estimate_adp_direction(corpus);
    CHECK(shuffled.adp_nominal_count == est.adp_nominal_count);
    CHECK(shuffled.nominal_adp_count == est.nominal_adp_count);

    // Reversing every sentence turns each ADP-nominal bigram into a nominal-ADP one.
    Corpus mirrored;
    for (auto tags : sentences) {
      std::reverse(tags.begin(), tags.end());
      mirrored.push_back(oracle::sentence_from_tags(tags));
    }
    auto flipped = estimate_adp_direction(mirrored);
    CHECK(flipped.adp_nominal_count == est.nominal_adp_count);
    CHECK(flipped.nominal_adp_count == est.adp_nominal_count);
    if (est.adp_nominal_count != est.nominal_adp_count) CHECK(flipped.resolved != est.resolved);
  }
}

TEST_CASE("ADP-free corpora still decode to valid trees") {
  std::mt19937 rng(3);
  Corpus corpus;
  for (int i = 0; i < 50; ++i) {
    auto tags = oracle::random_tags(rng, 1, 20);
    std::replace(tags.begin(), tags.end(), Upos::ADP, Upos::NOUN);
    corpus.push_back(oracle::sentence_from_tags(tags));
  }
  auto est = estimate_adp_direction(corpus);
  REQUIRE(est.resolved == Direction::HeadOnRight);
  DirectionPolicy policy = DirectionPolicy::universal().with_adp(est.resolved);
  for (const auto& s : corpus) {
    auto tree = decode(rank(s, RuleSet::universal()), policy, RuleSet::universal());
    CHECK(is_valid_tree(s, tree));
  }
}
