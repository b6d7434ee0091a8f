#include "udp/direction.hpp"

namespace udp {

AdpDirectionEstimate& AdpDirectionEstimate::operator+=(const AdpDirectionEstimate& other) {
  adp_nominal_count += other.adp_nominal_count;
  nominal_adp_count += other.nominal_adp_count;
  resolve();
  return *this;
}

void AdpDirectionEstimate::resolve() {
  resolved = adp_nominal_count >= nominal_adp_count ? Direction::HeadOnRight
                                                    : Direction::HeadOnLeft;
}

AdpDirectionEstimate count_adp_bigrams(std::span<const Upos> tags) {
  AdpDirectionEstimate est;
  for (std::size_t i = 1; i < tags.size(); ++i) {
    if (tags[i - 1] == Upos::ADP && is_nominal(tags[i])) ++est.adp_nominal_count;
    if (is_nominal(tags[i - 1]) && tags[i] == Upos::ADP) ++est.nominal_adp_count;
  }
  est.resolve();
  return est;
}

AdpDirectionEstimate estimate_adp_direction(std::span<const Sentence> corpus) {
  AdpDirectionEstimate total;
  for (const auto& sentence : corpus) {
    auto tags = sentence.tags();
    total += count_adp_bigrams(tags);
  }
  total.resolve();
  return total;
}

}  // namespace udp
