#ifndef UDP_DIRECTION_HPP_
#define UDP_DIRECTION_HPP_

#include <span>

#include "udp/conllu.hpp"
#include "udp/rules.hpp"

namespace udp {

struct AdpDirectionEstimate {
  long adp_nominal_count = 0;
  long nominal_adp_count = 0;
  // Prepositions (head on the right) unless postposition bigrams are strictly more frequent.
  Direction resolved = Direction::HeadOnRight;

  AdpDirectionEstimate& operator+=(const AdpDirectionEstimate& other);
  void resolve();
};

/// Counts adjacent ADP-nominal and nominal-ADP bigrams inside one tag sequence.
AdpDirectionEstimate count_adp_bigrams(std::span<const Upos> tags);

/// Counts over every sentence (bigrams never span sentences) and resolves the direction.
AdpDirectionEstimate estimate_adp_direction(std::span<const Sentence> corpus);

}  // namespace udp

#endif  // UDP_DIRECTION_HPP_
