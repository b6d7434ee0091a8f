// udp: command-line front end for the rule-based UD parser.
//
//   udp parse [-i in.conllu] [-o out.conllu] [--mode udp|udp-nopr|baseline|adjacency] ...
//   udp eval gold.conllu pred.conllu [--group-by genre] [--format text|kv]
//   udp stats [in.conllu]
//   udp bench gold.conllu [--pos gold|naive]
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "udp/eval.hpp"
#include "udp/pipeline.hpp"

namespace {

constexpr int kExitData = 2;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

udp::Corpus load(const std::string& path) {
  if (path.empty() || path == "-") return udp::read_conllu(std::cin);
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return udp::read_conllu(in);
  } catch (const udp::FormatError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string side_name(udp::Side s) { return s == udp::Side::Left ? "left" : "right"; }
std::string direction_name(udp::Direction d) {
  return d == udp::Direction::HeadOnLeft ? "left" : "right";
}

struct ParseArgs {
  std::string input;
  std::string output;
  std::string rules_path;
  udp::RunConfig config;
};

void add_run_options(CLI::App* cmd, udp::RunConfig& config) {
  std::map<std::string, udp::SystemMode> modes{{"udp", udp::SystemMode::Udp},
                                               {"udp-nopr", udp::SystemMode::UdpNoPr},
                                               {"baseline", udp::SystemMode::Baseline},
                                               {"adjacency", udp::SystemMode::Adjacency}};
  std::map<std::string, udp::PosSource> pos{{"gold", udp::PosSource::GoldColumn},
                                            {"gold-column", udp::PosSource::GoldColumn},
                                            {"naive", udp::PosSource::Naive}};
  std::map<std::string, udp::AdpSetting> adp{{"auto", udp::AdpSetting::Auto},
                                             {"left", udp::AdpSetting::Left},
                                             {"right", udp::AdpSetting::Right}};
  std::map<std::string, udp::Side> sides{{"left", udp::Side::Left}, {"right", udp::Side::Right}};

  cmd->add_option("--mode", config.mode, "udp, udp-nopr, baseline or adjacency")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  cmd->add_option("--pos", config.pos_source, "Tags from the UPOS column (gold) or naive")
      ->transform(CLI::CheckedTransformer(pos, CLI::ignore_case));
  cmd->add_option("--adp", config.adp, "ADP head side: auto, left or right")
      ->transform(CLI::CheckedTransformer(adp, CLI::ignore_case));
  cmd->add_option("--teleport", config.teleport, "PageRank teleport probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--weight", config.personalization_weight,
                  "Personalization weight of the main predicate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--backoff-direction", config.backoff,
                  "Neighbour for uncovered words in baseline/adjacency modes")
      ->transform(CLI::CheckedTransformer(sides, CLI::ignore_case));
}

int run_parse(const ParseArgs& args) {
  udp::RunConfig config = args.config;
  if (config.teleport <= 0.0 || config.teleport >= 1.0) {
    std::cerr << "udp parse: --teleport must lie strictly between 0 and 1\n";
    return 1;
  }
  if (!args.rules_path.empty()) {
    std::ifstream in(args.rules_path);
    if (!in) throw DataError("cannot open rule file '" + args.rules_path + "'");
    config.custom_rules = udp::read_rule_file(in);
  }
  udp::Corpus corpus = load(args.input);
  udp::ParseOutcome outcome = udp::parse_corpus(corpus, config);

  if (args.output.empty() || args.output == "-") {
    udp::write_conllu(std::cout, outcome.parsed);
  } else {
    std::ofstream out(args.output);
    if (!out) throw DataError("cannot write '" + args.output + "'");
    udp::write_conllu(out, outcome.parsed);
  }
  std::cerr << "sentences=" << outcome.parsed.size() << " well_formed=" << outcome.well_formed
            << " adp=" << direction_name(outcome.adp_used);
  if (config.mode == udp::SystemMode::Baseline || config.mode == udp::SystemMode::Adjacency) {
    std::cerr << " backoff=" << side_name(outcome.side_used);
  }
  std::cerr << "\n";
  return 0;
}

int run_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& group_key, const std::string& format) {
  udp::Corpus gold = load(gold_path);
  udp::Corpus pred = load(pred_path);
  udp::EvalReport report = udp::uas(gold, pred);
  const bool kv = format == "kv";
  kv ? udp::write_report_kv(std::cout, report) : udp::write_report_text(std::cout, report);
  if (!group_key.empty()) {
    udp::DomainReport domains = udp::domain_report(gold, pred, group_key);
    if (!kv) std::cout << "\nGrouped by '" << group_key << "':\n";
    kv ? udp::write_domain_kv(std::cout, domains) : udp::write_domain_text(std::cout, domains);
  }
  return 0;
}

int run_stats(const std::string& path) {
  udp::Corpus corpus = load(path);
  long tokens = 0;
  std::map<udp::Upos, long> histogram;
  for (const auto& s : corpus) {
    tokens += static_cast<long>(s.size());
    for (const auto& t : s.tokens) ++histogram[t.upos];
  }
  udp::AdpDirectionEstimate adp = udp::estimate_adp_direction(corpus);
  std::cout << "sentences=" << corpus.size() << "\n"
            << "tokens=" << tokens << "\n";
  for (const auto& [tag, count] : histogram) {
    std::cout << "tag." << udp::to_string(tag) << "=" << count << "\n";
  }
  std::cout << "adp_nominal=" << adp.adp_nominal_count << "\n"
            << "nominal_adp=" << adp.nominal_adp_count << "\n"
            << "adp_direction=" << direction_name(adp.resolved) << "\n";
  return 0;
}

int run_bench(const std::string& gold_path, udp::PosSource pos) {
  udp::Corpus gold = load(gold_path);
  struct System {
    const char* name;
    udp::SystemMode mode;
  };
  const System systems[] = {{"udp", udp::SystemMode::Udp},
                            {"udp-nopr", udp::SystemMode::UdpNoPr},
                            {"baseline", udp::SystemMode::Baseline},
                            {"adjacency", udp::SystemMode::Adjacency}};
  for (const auto& sys : systems) {
    udp::RunConfig config;
    config.mode = sys.mode;
    config.pos_source = pos;
    config.oracle_direction = true;
    udp::ParseOutcome outcome = udp::parse_corpus(gold, config);
    udp::EvalReport report = udp::uas(gold, outcome.parsed);
    char line[160];
    std::snprintf(line, sizeof line, "%-10s uas=%.2f root=%.2f well_formed=%ld/%zu", sys.name,
                  100.0 * report.uas, 100.0 * report.root_accuracy, outcome.well_formed,
                  outcome.parsed.size());
    std::cout << line;
    if (sys.mode == udp::SystemMode::Baseline || sys.mode == udp::SystemMode::Adjacency) {
      std::cout << " direction=" << side_name(outcome.side_used);
    } else {
      std::cout << " adp=" << direction_name(outcome.adp_used);
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Training-free dependency parser for Universal Dependencies"};
  app.require_subcommand(1);

  ParseArgs parse_args;
  auto* parse = app.add_subcommand("parse", "Parse a POS-tagged CoNLL-U corpus");
  parse->add_option("-i,--input", parse_args.input, "Input CoNLL-U (default: stdin)");
  parse->add_option("-o,--output", parse_args.output, "Output CoNLL-U (default: stdout)");
  parse->add_option("--rules", parse_args.rules_path, "Rule file replacing the built-in rules");
  parse->add_flag("--oracle-direction", parse_args.config.oracle_direction,
                  "Baseline/adjacency: pick the better side against the input's gold heads");
  add_run_options(parse, parse_args.config);

  std::string gold_path, pred_path, group_key, format = "text";
  auto* eval = app.add_subcommand("eval", "Score predicted heads against gold heads");
  eval->add_option("gold", gold_path, "Gold CoNLL-U")->required();
  eval->add_option("pred", pred_path, "Predicted CoNLL-U")->required();
  eval->add_option("--group-by", group_key, "Comment key to group sentences by (e.g. genre)");
  eval->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));

  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "Corpus counts and ADP direction estimate");
  stats->add_option("input", stats_path, "CoNLL-U file (default: stdin)");

  std::string bench_path;
  udp::PosSource bench_pos = udp::PosSource::GoldColumn;
  auto* bench = app.add_subcommand("bench", "Run every system on a gold corpus and report UAS");
  bench->add_option("gold", bench_path, "Gold CoNLL-U")->required();
  bench->add_option("--pos", bench_pos, "gold or naive")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, udp::PosSource>{{"gold", udp::PosSource::GoldColumn},
                                                {"naive", udp::PosSource::Naive}},
          CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*parse) return run_parse(parse_args);
    if (*eval) return run_eval(gold_path, pred_path, group_key, format);
    if (*stats) return run_stats(stats_path);
    if (*bench) return run_bench(bench_path, bench_pos);
  } catch (const std::exception& e) {
    std::cerr << "udp: " << e.what() << "\n";
    return kExitData;
  }
  return 1;
}
