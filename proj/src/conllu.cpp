#include "udp/conllu.hpp"

#include <charconv>
#include <sstream>

#include "udp/rules.hpp"

namespace udp {

std::vector<Upos> Sentence::tags() const {
  std::vector<Upos> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.upos);
  return out;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::string trim(const std::string& s) {
  const char* ws = " \t";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<int> parse_nonneg_int(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  Corpus run() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty()) {
        flush();
        continue;
      }
      if (!have_block_) block_start_ = line_no_;
      have_block_ = true;
      if (line[0] == '#') {
        comment(line);
      } else {
        word_line(line);
      }
    }
    flush();
    return std::move(corpus_);
  }

 private:
  void comment(const std::string& line) {
    current_.comments.push_back(line);
    std::string body = line.substr(1);
    if (auto eq = body.find('='); eq != std::string::npos) {
      std::string key = trim(body.substr(0, eq));
      if (!key.empty()) current_.meta[key] = trim(body.substr(eq + 1));
    }
  }

  void word_line(const std::string& line) {
    auto cols = split_tabs(line);
    if (cols.size() != 10) {
      throw FormatError(line_no_, "expected 10 tab-separated columns, found " +
                                      std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) {
      current_.passthrough.push_back({current_.tokens.size(), line});
      return;
    }
    auto index = parse_nonneg_int(id);
    if (!index) throw FormatError(line_no_, "non-integer token id '" + id + "'");
    int expected = static_cast<int>(current_.tokens.size()) + 1;
    if (*index != expected) {
      throw FormatError(line_no_, "token id " + id + " out of sequence, expected " +
                                      std::to_string(expected));
    }
    auto tag = parse_upos(cols[3]);
    if (!tag) throw FormatError(line_no_, "unknown UPOS tag '" + cols[3] + "'");

    Token tok;
    tok.index = *index;
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = *tag;
    tok.xpos = cols[4];
    tok.feats = cols[5];
    tok.misc = cols[9];
    if (cols[6] != "_") {
      auto head = parse_nonneg_int(cols[6]);
      if (!head) throw FormatError(line_no_, "non-integer head '" + cols[6] + "'");
      tok.gold_head = *head;
    }
    current_.tokens.push_back(std::move(tok));
  }

  void flush() {
    if (!have_block_) return;
    if (current_.tokens.empty()) {
      throw FormatError(block_start_, "sentence block without any word lines");
    }
    for (const auto& t : current_.tokens) {
      if (t.gold_head && *t.gold_head > static_cast<int>(current_.tokens.size())) {
        throw FormatError(block_start_, "head " + std::to_string(*t.gold_head) +
                                            " of token " + std::to_string(t.index) +
                                            " is outside the sentence");
      }
    }
    corpus_.push_back(std::move(current_));
    current_ = Sentence{};
    have_block_ = false;
  }

  std::istream& in_;
  Corpus corpus_;
  Sentence current_;
  bool have_block_ = false;
  int line_no_ = 0;
  int block_start_ = 0;
};

}  // namespace

Corpus read_conllu(std::istream& in) { return Reader(in).run(); }

Corpus read_conllu_string(const std::string& text) {
  std::istringstream in(text);
  return read_conllu(in);
}

void write_conllu(std::ostream& out, const Corpus& corpus) {
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const Sentence& sent = corpus[s];
    for (const auto& c : sent.comments) out << c << '\n';
    auto pass = sent.passthrough.begin();
    for (std::size_t i = 0; i <= sent.tokens.size(); ++i) {
      for (; pass != sent.passthrough.end() && pass->before_token == i; ++pass) {
        out << pass->text << '\n';
      }
      if (i == sent.tokens.size()) break;
      const Token& t = sent.tokens[i];
      if (!t.pred_head) {
        throw std::logic_error("sentence " + std::to_string(s + 1) + ", token " +
                               std::to_string(t.index) + ": no predicted head to write");
      }
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << to_string(t.upos) << '\t'
          << t.xpos << '\t' << t.feats << '\t' << *t.pred_head << "\tdep\t_\t" << t.misc
          << '\n';
    }
    out << '\n';
  }
}

std::string write_conllu_string(const Corpus& corpus) {
  std::ostringstream out;
  write_conllu(out, corpus);
  return out.str();
}

void assign_predicted(Sentence& sentence, const DependencyTree& tree) {
  if (tree.size() != sentence.size()) {
    throw std::invalid_argument("tree size does not match sentence length");
  }
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    sentence.tokens[i].pred_head = tree.heads[i];
  }
}

DependencyTree gold_tree(const Sentence& sentence) {
  DependencyTree tree;
  tree.heads.reserve(sentence.size());
  for (const auto& t : sentence.tokens) {
    if (!t.gold_head) {
      throw std::invalid_argument("token " + std::to_string(t.index) + " has no gold head");
    }
    tree.heads.push_back(*t.gold_head);
  }
  return tree;
}

DependencyTree predicted_tree(const Sentence& sentence) {
  DependencyTree tree;
  tree.heads.reserve(sentence.size());
  for (const auto& t : sentence.tokens) {
    if (t.pred_head) {
      tree.heads.push_back(*t.pred_head);
    } else if (t.gold_head) {
      tree.heads.push_back(*t.gold_head);
    } else {
      throw std::invalid_argument("token " + std::to_string(t.index) + " has no head");
    }
  }
  return tree;
}

const char* describe(Violation kind) {
  switch (kind) {
    case Violation::WrongHeadCount: return "head count differs from token count";
    case Violation::HeadOutOfRange: return "head index outside the sentence";
    case Violation::SelfLoop: return "token is its own head";
    case Violation::NoRoot: return "no token attached to the root";
    case Violation::MultipleRoots: return "more than one token attached to the root";
    case Violation::Cycle: return "token lies on a cycle";
    case Violation::Disconnected: return "token does not reach the root";
    case Violation::FunctionWordHasDependent: return "function word has a dependent";
  }
  return "unknown violation";
}

std::vector<TreeViolation> validate_tree(const Sentence& sentence, const DependencyTree& tree,
                                         TreeCheck checks) {
  std::vector<TreeViolation> found;
  const int n = static_cast<int>(sentence.size());
  if (static_cast<int>(tree.size()) != n) {
    found.push_back({Violation::WrongHeadCount, 0});
    return found;
  }

  bool heads_ok = true;
  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    int h = tree.head(i);
    if (h < 0 || h > n) {
      found.push_back({Violation::HeadOutOfRange, i});
      heads_ok = false;
    } else if (h == i) {
      found.push_back({Violation::SelfLoop, i});
      heads_ok = false;
    } else if (h == 0) {
      ++roots;
    }
  }
  if (roots == 0) found.push_back({Violation::NoRoot, 0});
  if (roots > 1) found.push_back({Violation::MultipleRoots, 0});
  if (!heads_ok) return found;

  // 0 = unvisited, 1 = on current walk, 2 = reaches root, 3 = does not reach root.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> on_cycle(static_cast<std::size_t>(n) + 1, false);
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> walk;
    int v = start;
    while (state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      walk.push_back(v);
      v = tree.head(v);
    }
    int outcome = state[static_cast<std::size_t>(v)];
    if (outcome == 1) {
      // v closes a new cycle within this walk
      int u = v;
      do {
        on_cycle[static_cast<std::size_t>(u)] = true;
        u = tree.head(u);
      } while (u != v);
      outcome = 3;
    }
    for (int w : walk) state[static_cast<std::size_t>(w)] = outcome;
  }
  for (int i = 1; i <= n; ++i) {
    if (on_cycle[static_cast<std::size_t>(i)]) {
      found.push_back({Violation::Cycle, i});
    } else if (state[static_cast<std::size_t>(i)] == 3) {
      found.push_back({Violation::Disconnected, i});
    }
  }

  if (checks == TreeCheck::Structure) return found;

  bool has_content = false;
  for (const auto& t : sentence.tokens) has_content = has_content || is_content(t.upos);
  std::vector<bool> has_dependent(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) has_dependent[static_cast<std::size_t>(tree.head(i))] = true;
  for (int i = 1; i <= n; ++i) {
    if (is_content(sentence.at(i).upos) || !has_dependent[static_cast<std::size_t>(i)]) continue;
    if (!has_content && tree.head(i) == 0) continue;
    found.push_back({Violation::FunctionWordHasDependent, i});
  }
  return found;
}

}  // namespace udp
