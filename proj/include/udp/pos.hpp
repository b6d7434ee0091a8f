#ifndef UDP_POS_HPP_
#define UDP_POS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace udp {

// Universal POS inventory (v1 names, plus CCONJ as spelled in v2 treebanks)
// and the two synthetic tags used by the naive content/function scenario.
enum class Upos : unsigned char {
  ADJ,
  ADP,
  ADV,
  AUX,
  CONJ,
  CCONJ,
  DET,
  INTJ,
  NOUN,
  NUM,
  PART,
  PRON,
  PROPN,
  PUNCT,
  SCONJ,
  SYM,
  VERB,
  X,
  CONTENT,
  FUNCTION,
};

inline constexpr std::size_t kUposCount = 20;

// The 17 universal tags of the v1 inventory, in alphabetical order.
inline constexpr std::array<Upos, 17> kUniversalTags = {
    Upos::ADJ,  Upos::ADP,  Upos::ADV,   Upos::AUX,   Upos::CONJ,  Upos::DET,
    Upos::INTJ, Upos::NOUN, Upos::NUM,   Upos::PART,  Upos::PRON,  Upos::PROPN,
    Upos::PUNCT, Upos::SCONJ, Upos::SYM, Upos::VERB, Upos::X};

constexpr std::size_t index_of(Upos tag) { return static_cast<std::size_t>(tag); }

std::string_view to_string(Upos tag);

/// Parses an exact (case-sensitive) tag name; nullopt for anything outside the inventory.
std::optional<Upos> parse_upos(std::string_view name);

}  // namespace udp

#endif  // UDP_POS_HPP_
