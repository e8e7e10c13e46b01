#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "mdiqss/qstate.hpp"
#include "mdiqss/rng.hpp"

namespace mdiqss {

// Result reported by the untrusted analyzer. It distinguishes psi+ from
// psi- deterministically and answers psi+/psi- with probability 1/2 each
// for phi+-; anything else is inconclusive.
enum class BsaOutcome : std::uint8_t { PsiPlus = 0, PsiMinus = 1, Inconclusive = 2 };

std::string to_string(BsaOutcome outcome);

// Clicks of the four single-photon detectors D1..D4.
// Valid two-detector signatures: {D1,D2} and {D3,D4} -> psi+,
// {D1,D3} and {D2,D4} -> psi-. Any other pattern is inconclusive.
struct ClickPattern {
    std::array<bool, 4> clicks{};

    int count() const;
    std::string to_string() const;
};

struct DetectorParams {
    double eta_det = 1.0;      // single-photon detector efficiency
    double p_dark = 0.0;       // dark-count probability per detector per round
    double eta_analyzer = 1.0; // internal efficiency of the analyzer

    void validate() const;
};

enum class Topology : std::uint8_t { Symmetric = 0, Proximal = 1 };

std::string to_string(Topology t);

// Born-rule projection onto {psi+, psi-}; the remainder is inconclusive.
BsaOutcome ideal_bsa(const TwoPhotonState& state, Rng& rng);

// Outcome probabilities of ideal_bsa without sampling: (p_psi_plus, p_psi_minus).
std::pair<double, double> bsa_projection_probabilities(const TwoPhotonState& state);

struct ClickResult {
    BsaOutcome outcome = BsaOutcome::Inconclusive;
    ClickPattern pattern;
};

// Click-level detector model. `projected` is the ideal outcome when both
// photons arrive (nullopt otherwise). The analyzer passes photons with
// probability eta_analyzer once per round; each signature detector fires
// with probability eta_det; a lone surviving photon is routed uniformly
// over the four detectors; dark counts then flip silent detectors on with
// probability p_dark each, and the final pattern is mapped to an outcome.
ClickResult click_bsa(bool arrived1, bool arrived2,
                      std::optional<BsaOutcome> projected,
                      const DetectorParams& det, Rng& rng);

// Probability that one transmitted pair yields a conclusive coincidence:
// eta_0 = eta_t^4 eta_det^2 eta_analyzer for the symmetric topology (each
// photon crosses two segments) and eta_t^2 eta_det^2 eta_analyzer for the
// proximal one (one segment per photon).
double coincidence_efficiency(const DetectorParams& det, double eta_t_segment,
                              Topology topology);

} // namespace mdiqss
