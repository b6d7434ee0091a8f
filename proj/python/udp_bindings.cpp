#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "udp/conllu.hpp"
#include "udp/eval.hpp"
#include "udp/pipeline.hpp"

namespace py = pybind11;
using namespace udp;

namespace {

std::vector<Upos> to_tags(const std::vector<std::string>& names) {
  std::vector<Upos> tags;
  for (const auto& n : names) {
    auto t = parse_upos(n);
    if (!t) throw std::invalid_argument("unknown tag: " + n);
    tags.push_back(*t);
  }
  return tags;
}

Direction to_direction(const std::string& s) {
  if (s == "left") return Direction::HeadOnLeft;
  if (s == "right") return Direction::HeadOnRight;
  throw std::invalid_argument("direction must be 'left' or 'right'");
}

std::string direction_name(Direction d) { return d == Direction::HeadOnLeft ? "left" : "right"; }

RunConfig make_config(const std::string& mode, const std::string& adp, const std::string& pos,
                      const std::string& backoff, double teleport, double weight) {
  RunConfig c;
  if (mode == "udp") c.mode = SystemMode::Udp;
  else if (mode == "udp-nopr") c.mode = SystemMode::UdpNoPr;
  else if (mode == "baseline") c.mode = SystemMode::Baseline;
  else if (mode == "adjacency") c.mode = SystemMode::Adjacency;
  else throw std::invalid_argument("unknown mode: " + mode);

  if (adp == "auto") c.adp = AdpSetting::Auto;
  else c.adp = to_direction(adp) == Direction::HeadOnLeft ? AdpSetting::Left : AdpSetting::Right;

  if (pos == "gold") c.pos_source = PosSource::GoldColumn;
  else if (pos == "naive") c.pos_source = PosSource::Naive;
  else throw std::invalid_argument("pos must be 'gold' or 'naive'");

  c.backoff = to_direction(backoff) == Direction::HeadOnLeft ? Side::Left : Side::Right;
  c.teleport = teleport;
  c.personalization_weight = weight;
  return c;
}

py::dict report_dict(const EvalReport& r) {
  py::dict per_pos;
  for (const auto& [tag, score] : r.per_pos) {
    per_pos[py::str(std::string(to_string(tag)))] = score.fraction();
  }
  py::dict d;
  d["uas"] = r.uas;
  d["root_accuracy"] = r.root_accuracy;
  d["tokens"] = r.token_count;
  d["sentences"] = r.sentence_count;
  d["per_pos"] = per_pos;
  return d;
}

}  // namespace

PYBIND11_MODULE(_udparse, m) {
  m.doc() = "Unsupervised dependency parsing with universal head rules";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<AlignmentError>(m, "AlignmentError", PyExc_ValueError);

  m.def(
      "parse_tags",
      [](const std::vector<std::string>& tags, const std::string& adp) {
        return Parser::universal(to_direction(adp)).parse(to_tags(tags)).heads;
      },
      py::arg("tags"), py::arg("adp") = "right",
      "Heads (1-based, 0 = root) for one sentence of UPOS tags.");

  m.def(
      "rank",
      [](const std::vector<std::string>& tags) {
        RankedSentence r = Parser::universal().rank(to_tags(tags));
        py::dict d;
        d["scores"] = r.scores;
        d["content"] = r.content;
        d["function"] = r.function;
        d["predicate"] = r.predicate_index;
        return d;
      },
      py::arg("tags"));

  m.def(
      "parse_conllu",
      [](const std::string& text, const std::string& mode, const std::string& adp,
         const std::string& pos, const std::string& backoff, double teleport, double weight) {
        RunConfig c = make_config(mode, adp, pos, backoff, teleport, weight);
        ParseOutcome out = parse_corpus(read_conllu_string(text), c);
        return write_conllu_string(out.parsed);
      },
      py::arg("text"), py::arg("mode") = "udp", py::arg("adp") = "auto", py::arg("pos") = "gold",
      py::arg("backoff") = "right", py::arg("teleport") = 0.05, py::arg("weight") = 5.0);

  m.def(
      "evaluate",
      [](const std::string& gold, const std::string& pred) {
        return report_dict(uas(read_conllu_string(gold), read_conllu_string(pred)));
      },
      py::arg("gold"), py::arg("pred"));

  m.def("error_propagation", &error_propagation, py::arg("parse_acc_pred_pos"),
        py::arg("parse_acc_gold_pos"), py::arg("pos_acc"));

  m.def(
      "adp_direction",
      [](const std::string& text) {
        Corpus c = read_conllu_string(text);
        AdpDirectionEstimate e = estimate_adp_direction(c);
        py::dict d;
        d["adp_nominal"] = e.adp_nominal_count;
        d["nominal_adp"] = e.nominal_adp_count;
        d["direction"] = direction_name(e.resolved);
        return d;
      },
      py::arg("text"));
}
