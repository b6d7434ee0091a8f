#ifndef UDP_EVAL_HPP_
#define UDP_EVAL_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "udp/conllu.hpp"

namespace udp {

struct PosScore {
  long correct = 0;
  long total = 0;
  double fraction() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct EvalReport {
  double uas = 0.0;
  std::map<Upos, PosScore> per_pos;  // keyed by gold tag
  double root_accuracy = 0.0;
  long token_count = 0;
  long sentence_count = 0;
  long correct_tokens = 0;
  long correct_roots = 0;
  // Sentences whose gold tree has zero or several root dependents; scored against the first.
  long malformed_gold_roots = 0;
};

class AlignmentError : public std::runtime_error {
 public:
  AlignmentError(std::size_t sentence, int token, const std::string& what);
  std::size_t sentence() const { return sentence_; }
  int token() const { return token_; }

 private:
  std::size_t sentence_;
  int token_;
};

/// Unlabeled attachment score over all tokens, punctuation included. Gold heads come from
/// `gold`; predicted heads from `pred` (pred_head, else the HEAD column). Throws
/// AlignmentError when the corpora differ in sentences, lengths or forms, and
/// std::invalid_argument when a gold head is missing.
EvalReport uas(const Corpus& gold, const Corpus& pred);

/// Extra parse errors per POS error: ((1 - parse_pred) - (1 - parse_gold)) / (1 - pos_acc).
/// nullopt when pos_acc is 1 and the ratio is undefined.
std::optional<double> error_propagation(double parse_acc_pred_pos, double parse_acc_gold_pos,
                                        double pos_acc);

struct DomainReport {
  std::map<std::string, EvalReport> groups;
  double mean_uas = 0.0;
  double std_uas = 0.0;  // population standard deviation over groups
};

inline constexpr const char* kUnknownGroup = "unknown";

DomainReport domain_report(const Corpus& gold, const Corpus& pred, const std::string& group_key);

void write_report_text(std::ostream& out, const EvalReport& report);
void write_report_kv(std::ostream& out, const EvalReport& report, const std::string& prefix = "");
void write_domain_text(std::ostream& out, const DomainReport& report);
void write_domain_kv(std::ostream& out, const DomainReport& report);

}  // namespace udp

#endif  // UDP_EVAL_HPP_
