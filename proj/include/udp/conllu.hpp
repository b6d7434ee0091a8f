#ifndef UDP_CONLLU_HPP_
#define UDP_CONLLU_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "udp/pos.hpp"

namespace udp {

/// One syntactic word. Heads are token indices with 0 for the virtual root.
struct Token {
  int index = 0;
  std::string form;
  Upos upos = Upos::X;
  std::optional<int> gold_head;
  std::optional<int> pred_head;

  // Columns carried through unchanged on output.
  std::string lemma = "_";
  std::string xpos = "_";
  std::string feats = "_";
  std::string misc = "_";
};

/// A multiword-token range or empty-node line, re-emitted before token `before_token`
/// (0-based; equal to the token count means after the last token).
struct PassThroughLine {
  std::size_t before_token = 0;
  std::string text;
};

struct Sentence {
  std::vector<Token> tokens;
  std::map<std::string, std::string> meta;
  std::vector<std::string> comments;
  std::vector<PassThroughLine> passthrough;

  std::size_t size() const { return tokens.size(); }
  const Token& at(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  std::vector<Upos> tags() const;
};

using Corpus = std::vector<Sentence>;

/// heads[i - 1] is the head of token i; 0 is the virtual root.
struct DependencyTree {
  std::vector<int> heads;

  int head(int index) const { return heads.at(static_cast<std::size_t>(index - 1)); }
  std::size_t size() const { return heads.size(); }
  bool operator==(const DependencyTree&) const = default;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Corpus read_conllu(std::istream& in);
Corpus read_conllu_string(const std::string& text);

/// Writes predicted heads in the HEAD column with relation `dep`. Throws std::logic_error if a
/// token has no predicted head.
void write_conllu(std::ostream& out, const Corpus& corpus);
std::string write_conllu_string(const Corpus& corpus);

/// Copies the heads of `tree` into pred_head.
void assign_predicted(Sentence& sentence, const DependencyTree& tree);
/// Gold heads as a tree; throws std::invalid_argument if any is missing.
DependencyTree gold_tree(const Sentence& sentence);
/// Predicted heads as a tree, falling back to the HEAD column read from file.
DependencyTree predicted_tree(const Sentence& sentence);

enum class Violation {
  WrongHeadCount,
  HeadOutOfRange,
  SelfLoop,
  NoRoot,
  MultipleRoots,
  Cycle,
  Disconnected,
  FunctionWordHasDependent,
};

struct TreeViolation {
  Violation kind;
  int token = 0;  // offending token, 0 when the violation is sentence-level
};

const char* describe(Violation kind);

enum class TreeCheck {
  Full,       // structure plus function-word leaves
  Structure,  // single root, acyclic, connected
};

/// Checks single root, acyclicity, connectivity and (with TreeCheck::Full) leafness of
/// function words. A sentence without any content word has to hang off a function word, so
/// its root dependent is exempt from the leaf check. Returns an empty list for a valid tree.
std::vector<TreeViolation> validate_tree(const Sentence& sentence, const DependencyTree& tree,
                                         TreeCheck checks = TreeCheck::Full);

inline bool is_valid_tree(const Sentence& sentence, const DependencyTree& tree,
                          TreeCheck checks = TreeCheck::Full) {
  return validate_tree(sentence, tree, checks).empty();
}

}  // namespace udp

#endif  // UDP_CONLLU_HPP_
