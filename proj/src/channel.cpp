#include "mdiqss/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mdiqss {

double LinkParams::transmittance() const {
    return std::pow(10.0, -alpha_db_per_km * length_km / 10.0);
}

void LinkParams::validate() const {
    if (!(alpha_db_per_km >= 0.0))
        throw std::invalid_argument("LinkParams: negative loss rate");
    if (!(length_km >= 0.0))
        throw std::invalid_argument("LinkParams: negative length");
    if (!(e_x >= 0.0 && e_x <= 0.5) || !(e_y >= 0.0 && e_y <= 0.5))
        throw std::invalid_argument("LinkParams: flip probabilities outside [0, 1/2]");
}

std::string to_string(AdversaryKind kind) {
    switch (kind) {
    case AdversaryKind::None: return "none";
    case AdversaryKind::InterceptResendX: return "intercept-x";
    case AdversaryKind::InterceptResendY: return "intercept-y";
    default: return "dishonest-bob";
    }
}

TransmitResult transmit(BellLabel label, const LinkParams& link, Rng& rng) {
    TransmitResult r{false, label};
    if (!rng.bernoulli(link.transmittance())) return r;
    r.survived = true;
    const double flip_p = label.basis == 0 ? link.e_x : link.e_y;
    if (flip_p > 0.0 && rng.bernoulli(flip_p)) r.label.sign ^= 1;
    return r;
}

double end_to_end_error(double e_x, double e_y) {
    if (!(e_x >= 0.0 && e_x <= 0.5) || !(e_y >= 0.0 && e_y <= 0.5))
        throw std::invalid_argument("end_to_end_error: inputs outside [0, 1/2]");
    return 1.5 * e_x + 0.5 * e_y - e_x * e_x - e_x * e_y;
}

BellLabel eve_intercept(BellLabel label, MeasureBasis strategy, Rng& rng) {
    const std::uint8_t family = strategy == MeasureBasis::X ? 0 : 1;
    if (label.basis == family) return label;
    return BellLabel{family, static_cast<std::uint8_t>(rng.bit())};
}

} // namespace mdiqss
