#pragma once

#include <cstdint>
#include <string>

#include "mdiqss/qstate.hpp"
#include "mdiqss/rng.hpp"

namespace mdiqss {

// One fiber segment. The flip probabilities act at the Bell-label level:
// a traversal flips the sign of a psi-family label with probability e_x and
// of a phi-family label with probability e_y; the family itself never
// changes in transit.
struct LinkParams {
    double alpha_db_per_km = 0.19;
    double length_km = 0.0;
    double e_x = 0.0;
    double e_y = 0.0;

    double transmittance() const; // 10^(-alpha L / 10)
    void validate() const;
};

enum class AdversaryKind : std::uint8_t {
    None = 0,
    InterceptResendX = 1,
    InterceptResendY = 2,
    DishonestBob = 3,
};

std::string to_string(AdversaryKind kind);

struct TransmitResult {
    bool survived = false;
    BellLabel label;
};

// One photon's passage through a segment, carrying the pair label.
TransmitResult transmit(BellLabel label, const LinkParams& link, Rng& rng);

// End-to-end error from per-basis flip probabilities, the two-stage
// composition e = (3/2)e_x + (1/2)e_y - e_x^2 - e_x e_y; reduces to
// 2 e_x (1 - e_x) in the unbiased case.
double end_to_end_error(double e_x, double e_y);

// Measure-and-resend of the in-flight photon in the chosen conjugate
// basis: transparent when the pair label already lives in the measured
// family, otherwise the label is replaced by a uniformly random label of
// that family.
BellLabel eve_intercept(BellLabel label, MeasureBasis strategy, Rng& rng);

} // namespace mdiqss
