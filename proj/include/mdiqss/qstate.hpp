#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdiqss/rng.hpp"

namespace mdiqss {

using cplx = std::complex<double>;

// Two-photon polarisation state. Amplitude order is fixed as
// (HH, HV, VH, VV); every 4x4 operator in the toolkit follows it.
struct TwoPhotonState {
    std::array<cplx, 4> amp{};

    double norm_sq() const;
    bool is_normalized(double tol = 1e-12) const;
};

// Symbolic Bell-state label.
//   basis: 0 = psi family (X), 1 = phi family (Y)
//   sign:  0 = "+", 1 = "-"
// psi+- = (|HV> +- |VH>)/sqrt2,  phi+- = (|HV> +- i|VH>)/sqrt2.
struct BellLabel {
    std::uint8_t basis = 0;
    std::uint8_t sign = 0;

    friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

inline constexpr BellLabel kPsiPlus{0, 0};
inline constexpr BellLabel kPsiMinus{0, 1};
inline constexpr BellLabel kPhiPlus{1, 0};
inline constexpr BellLabel kPhiMinus{1, 1};

inline constexpr std::array<BellLabel, 4> kBellLabels{kPsiPlus, kPsiMinus,
                                                      kPhiPlus, kPhiMinus};

std::string to_string(BellLabel label);

// A party's key-bit pair. `a` is announced publicly and selects the basis
// action; `b` stays private and selects the sign action.
struct EncodingKeys {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    friend bool operator==(const EncodingKeys&, const EncodingKeys&) = default;
};

// Single-photon operator, diagonal in the H/V basis.
struct LocalOp {
    cplx diag_h{1.0, 0.0};
    cplx diag_v{1.0, 0.0};

    bool is_unitary(double tol = 1e-12) const;
};

// U_ab with diag_v = 1, -1, i, -i for (a,b) = (0,0), (0,1), (1,0), (1,1).
LocalOp local_op(EncodingKeys keys);

// Normalised amplitude vector of the named Bell state.
TwoPhotonState bell_vector(BellLabel label);

// (U (x) I) or (I (x) U) applied to the state; photon must be 1 or 2.
TwoPhotonState apply_local(const TwoPhotonState& state, const LocalOp& op,
                           int photon);

// Global-phase-insensitive equality: phase-align on b's largest-magnitude
// component, then compare componentwise.
bool approx_equal_up_to_phase(const TwoPhotonState& a, const TwoPhotonState& b,
                              double tol = 1e-9);

// The label whose bell_vector matches the state up to a global phase,
// nullopt when the state is not a Bell state.
std::optional<BellLabel> classify(const TwoPhotonState& state);

// Symbolic group action of U_ab on a Bell label; agrees exactly with
// classify(apply_local(bell_vector(label), local_op(keys), photon)).
// The two photons transform differently under the a=1 operators:
//   photon 1: sign' = sign ^ b ^ (a & basis)
//   photon 2: sign' = sign ^ b ^ (a & !basis)
// with basis' = basis ^ a in both cases.
BellLabel transition(BellLabel label, EncodingKeys keys, int photon = 1);

// ---------------------------------------------------------------------------
// Small dense state vectors for the virtual-GHZ purification checks.

struct PhotonState {
    int photons = 0;
    std::vector<cplx> amp; // size 2^photons, photon 1 = most significant bit

    double norm_sq() const;
    bool is_normalized(double tol = 1e-12) const;
};

enum class MeasureBasis : std::uint8_t { X = 0, Y = 1 };

// (|HHV> + |VVH>)/sqrt2
PhotonState ghz3_plus();
// (|HHHV> + |VVVH>)/sqrt2
PhotonState ghz4_plus();

struct AncillaResult {
    int outcome = 0;     // 0 -> {|+>, |-i>}, 1 -> {|->, |+i>}
    PhotonState residual; // normalised, one photon fewer
};

// Projective measurement of the leading photon in the X or Y basis. The
// outcome is drawn from the Born probabilities using `u` in [0,1); the
// Rng overload draws u itself.
AncillaResult measure_leading_photon(const PhotonState& state,
                                     MeasureBasis basis, double u);
AncillaResult measure_leading_photon(const PhotonState& state,
                                     MeasureBasis basis, Rng& rng);

// 3-photon convenience: measures photon 1 and returns the collapsed pair.
// X outcome |+>/|-> leaves psi+/psi-; Y outcome |-i>/|+i> leaves phi+/phi-.
std::pair<int, TwoPhotonState> measure_ancilla(const PhotonState& state,
                                               MeasureBasis basis, Rng& rng);

// 2-photon PhotonState -> TwoPhotonState
TwoPhotonState to_pair(const PhotonState& state);

} // namespace mdiqss
