#include "mdiqss/qstate.hpp"

#include <cmath>
#include <stdexcept>

namespace mdiqss {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kI{0.0, 1.0};
} // namespace

double TwoPhotonState::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amp) n += std::norm(a);
    return n;
}

bool TwoPhotonState::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

std::string to_string(BellLabel label) {
    const char* family = label.basis == 0 ? "psi" : "phi";
    return std::string(family) + (label.sign == 0 ? "+" : "-");
}

bool LocalOp::is_unitary(double tol) const {
    return std::abs(std::abs(diag_h) - 1.0) <= tol &&
           std::abs(std::abs(diag_v) - 1.0) <= tol;
}

LocalOp local_op(EncodingKeys keys) {
    static constexpr std::array<cplx, 4> diag_v{cplx{1, 0}, cplx{-1, 0},
                                                cplx{0, 1}, cplx{0, -1}};
    return LocalOp{cplx{1, 0}, diag_v[keys.a * 2 + keys.b]};
}

TwoPhotonState bell_vector(BellLabel label) {
    TwoPhotonState s;
    s.amp[1] = kInvSqrt2; // |HV>
    cplx c = label.basis == 0 ? cplx{kInvSqrt2, 0} : kI * kInvSqrt2;
    s.amp[2] = label.sign == 0 ? c : -c; // |VH>
    return s;
}

TwoPhotonState apply_local(const TwoPhotonState& state, const LocalOp& op,
                           int photon) {
    if (photon != 1 && photon != 2)
        throw std::invalid_argument("apply_local: photon index must be 1 or 2");
    TwoPhotonState out;
    for (int i = 0; i < 4; ++i) {
        const int bit = photon == 1 ? (i >> 1) : (i & 1);
        out.amp[i] = state.amp[i] * (bit == 0 ? op.diag_h : op.diag_v);
    }
    return out;
}

bool approx_equal_up_to_phase(const TwoPhotonState& a, const TwoPhotonState& b,
                              double tol) {
    int m = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(b.amp[i]) > std::abs(b.amp[m])) m = i;
    if (std::abs(b.amp[m]) < tol) return false;
    const cplx phase = a.amp[m] / b.amp[m];
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    for (int i = 0; i < 4; ++i)
        if (std::abs(a.amp[i] - phase * b.amp[i]) > tol) return false;
    return true;
}

std::optional<BellLabel> classify(const TwoPhotonState& state) {
    for (const auto& label : kBellLabels)
        if (approx_equal_up_to_phase(state, bell_vector(label), 1e-9))
            return label;
    return std::nullopt;
}

BellLabel transition(BellLabel label, EncodingKeys keys, int photon) {
    if (photon != 1 && photon != 2)
        throw std::invalid_argument("transition: photon index must be 1 or 2");
    const std::uint8_t family_bit =
        photon == 1 ? label.basis : static_cast<std::uint8_t>(1 - label.basis);
    return BellLabel{
        static_cast<std::uint8_t>(label.basis ^ keys.a),
        static_cast<std::uint8_t>(label.sign ^ keys.b ^ (keys.a & family_bit))};
}

// ---------------------------------------------------------------------------

double PhotonState::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amp) n += std::norm(a);
    return n;
}

bool PhotonState::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

PhotonState ghz3_plus() {
    PhotonState s{3, std::vector<cplx>(8)};
    s.amp[0b001] = kInvSqrt2; // |HHV>
    s.amp[0b110] = kInvSqrt2; // |VVH>
    return s;
}

PhotonState ghz4_plus() {
    PhotonState s{4, std::vector<cplx>(16)};
    s.amp[0b0001] = kInvSqrt2; // |HHHV>
    s.amp[0b1110] = kInvSqrt2; // |VVVH>
    return s;
}

AncillaResult measure_leading_photon(const PhotonState& state,
                                     MeasureBasis basis, double u) {
    if (state.photons < 2)
        throw std::invalid_argument("measure_leading_photon: need >= 2 photons");
    if (!state.is_normalized(1e-9))
        throw std::invalid_argument("measure_leading_photon: unnormalized input");

    // Outcome-0 bras: <+| = (<H| + <V|)/sqrt2, <-i| = (<H| + i<V|)*conj/sqrt2.
    // Stored as conjugated coefficients applied to (H, V) components.
    const cplx ch = kInvSqrt2;
    const cplx cv0 = basis == MeasureBasis::X ? cplx{kInvSqrt2, 0}
                                              : kI * kInvSqrt2; // <-i|V> = i/sqrt2
    const cplx cv1 = basis == MeasureBasis::X ? cplx{-kInvSqrt2, 0}
                                              : -kI * kInvSqrt2; // <+i|V> = -i/sqrt2

    const std::size_t half = state.amp.size() / 2;
    PhotonState res0{state.photons - 1, std::vector<cplx>(half)};
    PhotonState res1{state.photons - 1, std::vector<cplx>(half)};
    for (std::size_t k = 0; k < half; ++k) {
        res0.amp[k] = ch * state.amp[k] + cv0 * state.amp[half + k];
        res1.amp[k] = ch * state.amp[k] + cv1 * state.amp[half + k];
    }
    const double p0 = res0.norm_sq();

    AncillaResult out;
    out.outcome = u < p0 ? 0 : 1;
    PhotonState& chosen = out.outcome == 0 ? res0 : res1;
    const double inv = 1.0 / std::sqrt(out.outcome == 0 ? p0 : 1.0 - p0);
    for (auto& a : chosen.amp) a *= inv;
    out.residual = std::move(chosen);
    return out;
}

AncillaResult measure_leading_photon(const PhotonState& state,
                                     MeasureBasis basis, Rng& rng) {
    return measure_leading_photon(state, basis, rng.uniform());
}

std::pair<int, TwoPhotonState> measure_ancilla(const PhotonState& state,
                                               MeasureBasis basis, Rng& rng) {
    if (state.photons != 3)
        throw std::invalid_argument("measure_ancilla: expected a 3-photon state");
    AncillaResult r = measure_leading_photon(state, basis, rng);
    return {r.outcome, to_pair(r.residual)};
}

TwoPhotonState to_pair(const PhotonState& state) {
    if (state.photons != 2)
        throw std::invalid_argument("to_pair: expected a 2-photon state");
    TwoPhotonState s;
    for (int i = 0; i < 4; ++i) s.amp[i] = state.amp[i];
    return s;
}

} // namespace mdiqss
