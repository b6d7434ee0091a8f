#include "udp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace udp {

AlignmentError::AlignmentError(std::size_t sentence, int token, const std::string& what)
    : std::runtime_error("sentence " + std::to_string(sentence) +
                         (token > 0 ? ", token " + std::to_string(token) : std::string()) + ": " +
                         what),
      sentence_(sentence),
      token_(token) {}

namespace {

void check_aligned(const Sentence& g, const Sentence& p, std::size_t s) {
  if (g.size() != p.size()) {
    throw AlignmentError(s, 0, "token counts differ (" + std::to_string(g.size()) + " vs " +
                                   std::to_string(p.size()) + ")");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.tokens[i].form != p.tokens[i].form) {
      throw AlignmentError(s, static_cast<int>(i) + 1,
                           "forms differ ('" + g.tokens[i].form + "' vs '" +
                               p.tokens[i].form + "')");
    }
  }
}

void finish(EvalReport& r) {
  r.uas = r.token_count == 0 ? 0.0 : static_cast<double>(r.correct_tokens) / r.token_count;
  r.root_accuracy =
      r.sentence_count == 0 ? 0.0 : static_cast<double>(r.correct_roots) / r.sentence_count;
}

void score_sentence(EvalReport& r, const Sentence& g, const Sentence& p, std::size_t s) {
  check_aligned(g, p, s);
  DependencyTree gold = gold_tree(g);
  DependencyTree pred;
  try {
    pred = predicted_tree(p);
  } catch (const std::invalid_argument& e) {
    throw AlignmentError(s, 0, std::string("prediction incomplete: ") + e.what());
  }
  int gold_root = 0;
  int gold_roots = 0;
  int pred_root = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    const bool correct = gold.heads[i] == pred.heads[i];
    PosScore& bucket = r.per_pos[g.tokens[i].upos];
    ++bucket.total;
    if (correct) {
      ++bucket.correct;
      ++r.correct_tokens;
    }
    ++r.token_count;
    if (gold.heads[i] == 0 && gold_roots++ == 0) gold_root = index;
    if (pred.heads[i] == 0 && pred_root == 0) pred_root = index;
  }
  if (gold_roots != 1) ++r.malformed_gold_roots;
  if (gold_root != 0 && gold_root == pred_root) ++r.correct_roots;
  ++r.sentence_count;
}

}  // namespace

EvalReport uas(const Corpus& gold, const Corpus& pred) {
  if (gold.size() != pred.size()) {
    throw AlignmentError(std::min(gold.size(), pred.size()) + 1, 0,
                         "corpora differ in sentence count (" + std::to_string(gold.size()) +
                             " vs " + std::to_string(pred.size()) + ")");
  }
  EvalReport r;
  for (std::size_t s = 0; s < gold.size(); ++s) score_sentence(r, gold[s], pred[s], s + 1);
  finish(r);
  return r;
}

std::optional<double> error_propagation(double parse_acc_pred_pos, double parse_acc_gold_pos,
                                        double pos_acc) {
  const double pos_error = 1.0 - pos_acc;
  if (pos_error == 0.0) return std::nullopt;
  return ((1.0 - parse_acc_pred_pos) - (1.0 - parse_acc_gold_pos)) / pos_error;
}

DomainReport domain_report(const Corpus& gold, const Corpus& pred, const std::string& group_key) {
  if (gold.size() != pred.size()) {
    throw AlignmentError(std::min(gold.size(), pred.size()) + 1, 0,
                         "corpora differ in sentence count");
  }
  DomainReport d;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    auto it = gold[s].meta.find(group_key);
    const std::string group = it == gold[s].meta.end() ? kUnknownGroup : it->second;
    score_sentence(d.groups[group], gold[s], pred[s], s + 1);
  }
  if (d.groups.empty()) return d;
  double sum = 0.0;
  for (auto& [name, report] : d.groups) {
    finish(report);
    sum += report.uas;
  }
  const double k = static_cast<double>(d.groups.size());
  d.mean_uas = sum / k;
  double sq = 0.0;
  for (const auto& [name, report] : d.groups) sq += (report.uas - d.mean_uas) * (report.uas - d.mean_uas);
  d.std_uas = std::sqrt(sq / k);
  return d;
}

namespace {

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * fraction);
  return buf;
}

std::string num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

void write_report_text(std::ostream& out, const EvalReport& r) {
  out << "Sentences: " << r.sentence_count << "\n"
      << "Tokens: " << r.token_count << "\n"
      << "UAS: " << pct(r.uas) << " (" << r.correct_tokens << "/" << r.token_count << ")\n"
      << "Root accuracy: " << pct(r.root_accuracy) << " (" << r.correct_roots << "/"
      << r.sentence_count << ")\n";
  if (r.malformed_gold_roots > 0) {
    out << "Warning: " << r.malformed_gold_roots
        << " gold sentence(s) without exactly one root; scored against the first\n";
  }
  out << "Per-POS UAS:\n";
  for (const auto& [tag, score] : r.per_pos) {
    out << "  " << to_string(tag) << "\t" << pct(score.fraction()) << "\t(" << score.correct
        << "/" << score.total << ")\n";
  }
}

void write_report_kv(std::ostream& out, const EvalReport& r, const std::string& prefix) {
  out << prefix << "sentences=" << r.sentence_count << "\n"
      << prefix << "tokens=" << r.token_count << "\n"
      << prefix << "uas=" << num(r.uas) << "\n"
      << prefix << "root_accuracy=" << num(r.root_accuracy) << "\n"
      << prefix << "malformed_gold_roots=" << r.malformed_gold_roots << "\n";
  for (const auto& [tag, score] : r.per_pos) {
    const std::string key = prefix + "pos." + std::string(to_string(tag));
    out << key << ".correct=" << score.correct << "\n"
        << key << ".total=" << score.total << "\n"
        << key << ".uas=" << num(score.fraction()) << "\n";
  }
}

void write_domain_text(std::ostream& out, const DomainReport& d) {
  out << "Group\tSentences\tTokens\tUAS\n";
  for (const auto& [name, r] : d.groups) {
    out << name << "\t" << r.sentence_count << "\t" << r.token_count << "\t" << pct(r.uas)
        << "\n";
  }
  out << "Mean UAS: " << pct(d.mean_uas) << "\n"
      << "Std UAS: " << pct(d.std_uas) << "\n";
}

void write_domain_kv(std::ostream& out, const DomainReport& d) {
  for (const auto& [name, r] : d.groups) {
    out << "group." << name << ".sentences=" << r.sentence_count << "\n"
        << "group." << name << ".tokens=" << r.token_count << "\n"
        << "group." << name << ".uas=" << num(r.uas) << "\n";
  }
  out << "groups=" << d.groups.size() << "\n"
      << "mean_uas=" << num(d.mean_uas) << "\n"
      << "std_uas=" << num(d.std_uas) << "\n";
}

}  // namespace udp
