#include "mdiqss/bsa.hpp"

#include <cmath>
#include <stdexcept>

namespace mdiqss {

namespace {

// detector pairs forming valid signatures, indexed 0..3 over D1..D4
constexpr std::array<std::array<int, 2>, 2> kPsiPlusPairs{{{0, 1}, {2, 3}}};
constexpr std::array<std::array<int, 2>, 2> kPsiMinusPairs{{{0, 2}, {1, 3}}};

std::optional<BsaOutcome> outcome_from_pattern(const ClickPattern& p) {
    if (p.count() != 2) return std::nullopt;
    for (const auto& pr : kPsiPlusPairs)
        if (p.clicks[pr[0]] && p.clicks[pr[1]]) return BsaOutcome::PsiPlus;
    for (const auto& pr : kPsiMinusPairs)
        if (p.clicks[pr[0]] && p.clicks[pr[1]]) return BsaOutcome::PsiMinus;
    return std::nullopt;
}

} // namespace

std::string to_string(BsaOutcome outcome) {
    switch (outcome) {
    case BsaOutcome::PsiPlus: return "psi+";
    case BsaOutcome::PsiMinus: return "psi-";
    default: return "inconclusive";
    }
}

int ClickPattern::count() const {
    int n = 0;
    for (bool c : clicks) n += c ? 1 : 0;
    return n;
}

std::string ClickPattern::to_string() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
        if (clicks[i]) s[i] = '1';
    return s;
}

void DetectorParams::validate() const {
    if (!(eta_det >= 0.0 && eta_det <= 1.0))
        throw std::invalid_argument("DetectorParams: eta_det outside [0,1]");
    if (!(p_dark >= 0.0 && p_dark < 1.0))
        throw std::invalid_argument("DetectorParams: p_dark outside [0,1)");
    if (!(eta_analyzer >= 0.0 && eta_analyzer <= 1.0))
        throw std::invalid_argument("DetectorParams: eta_analyzer outside [0,1]");
}

std::string to_string(Topology t) {
    return t == Topology::Symmetric ? "symmetric" : "proximal";
}

std::pair<double, double> bsa_projection_probabilities(const TwoPhotonState& state) {
    if (!state.is_normalized(1e-9))
        throw std::invalid_argument("bsa: unnormalized input state");
    const TwoPhotonState plus = bell_vector(kPsiPlus);
    const TwoPhotonState minus = bell_vector(kPsiMinus);
    cplx op{0, 0}, om{0, 0};
    for (int i = 0; i < 4; ++i) {
        op += std::conj(plus.amp[i]) * state.amp[i];
        om += std::conj(minus.amp[i]) * state.amp[i];
    }
    return {std::norm(op), std::norm(om)};
}

BsaOutcome ideal_bsa(const TwoPhotonState& state, Rng& rng) {
    const auto [pp, pm] = bsa_projection_probabilities(state);
    const double u = rng.uniform();
    if (u < pp) return BsaOutcome::PsiPlus;
    if (u < pp + pm) return BsaOutcome::PsiMinus;
    return BsaOutcome::Inconclusive;
}

ClickResult click_bsa(bool arrived1, bool arrived2,
                      std::optional<BsaOutcome> projected,
                      const DetectorParams& det, Rng& rng) {
    det.validate();
    ClickResult r;

    if (arrived1 && arrived2) {
        if (!projected.has_value())
            throw std::invalid_argument("click_bsa: projected outcome required when both photons arrive");
        if (*projected != BsaOutcome::Inconclusive &&
            rng.bernoulli(det.eta_analyzer)) {
            const auto& pairs = *projected == BsaOutcome::PsiPlus
                                    ? kPsiPlusPairs
                                    : kPsiMinusPairs;
            const auto& pair = pairs[rng.bit()];
            for (int d : pair)
                if (rng.bernoulli(det.eta_det)) r.pattern.clicks[d] = true;
        }
    } else if (arrived1 || arrived2) {
        // lone photon: at most one signal click, routed uniformly
        if (rng.bernoulli(det.eta_analyzer) && rng.bernoulli(det.eta_det))
            r.pattern.clicks[rng.below(4)] = true;
    }

    for (int d = 0; d < 4; ++d)
        if (!r.pattern.clicks[d] && rng.bernoulli(det.p_dark))
            r.pattern.clicks[d] = true;

    r.outcome = outcome_from_pattern(r.pattern).value_or(BsaOutcome::Inconclusive);
    return r;
}

double coincidence_efficiency(const DetectorParams& det, double eta_t_segment,
                              Topology topology) {
    det.validate();
    if (!(eta_t_segment > 0.0 && eta_t_segment <= 1.0))
        throw std::invalid_argument("coincidence_efficiency: eta_t outside (0,1]");
    const double crossings = topology == Topology::Symmetric ? 4.0 : 2.0;
    return std::pow(eta_t_segment, crossings) * det.eta_det * det.eta_det *
           det.eta_analyzer;
}

} // namespace mdiqss
