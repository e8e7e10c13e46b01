#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mdiqss/bsa.hpp"
#include "mdiqss/linalg.hpp"

namespace mdiqss {

// Parameter set for the closed-form rate analysis. e_x/e_y are the
// end-to-end per-basis flip probabilities (channel fidelity P = 1 - e_x).
struct SystemParams {
    DetectorParams det{0.93, 1e-7, 0.863};
    double alpha_db_per_km = 0.19;
    double e_x = 0.0;
    double e_y = 0.0;
    Topology topology = Topology::Symmetric;
    // Q_Eve = q_eve_scale * Q; the paper's working assumption is 1.
    double q_eve_scale = 1.0;

    void validate() const;
};

struct GramSpectrum {
    double beta = 0.0;
    std::array<double, 8> eigenvalues{}; // ascending
    double entropy_bits = 0.0;
};

struct RatePoint {
    double length_km = 0.0;
    double rate_raw = 0.0;
    double rate_clamped = 0.0;
    double e_tot = 0.0;
    double q = 0.0;
};

struct RateCurve {
    std::vector<RatePoint> points;
    SystemParams params;
};

struct DarkCountErrors {
    double e_d1 = 0.0;
    double e_d2 = 0.0;
};

// h(x) = -x log2 x - (1-x) log2 (1-x), continuous at the endpoints.
double binary_entropy(double x);

// Eve's Holevo information bound q_eve * h(e_x + e_y); valid for
// e_x + e_y <= 1/2.
double holevo_bound(double e_x, double e_y, double q_eve);

// The 8x8 Gram matrix of the post-attack ensemble for a given overlap
// parameter beta (auxiliary parameter alpha fixed to 0), and its spectrum
// computed with the in-house Jacobi eigensolver. Closed form:
// {0 x4, (1-beta)/4 x2, (1+beta)/4 x2}, entropy 1 + h((1+beta)/2).
HermitianMatrix gram_matrix(double beta);
GramSpectrum gram_spectrum(double beta);

// Numerical maximisation of S(rho) over the allowed beta interval
// [1-2ex-2ey, 1+2ex-2ey]; returns the maximising spectrum and the Holevo
// bound S_max - 1, which equals h(e_x + e_y) at beta = 1-2ex-2ey.
std::pair<GramSpectrum, double> gram_holevo(double e_x, double e_y);

// per-segment transmittance 10^(-alpha L / 10)
double segment_transmittance(const SystemParams& params, double length_km);

// Q = eta_0 for the configured topology at distance L.
double pair_efficiency(const SystemParams& params, double length_km);

// QSS generation rate without dark counts:
// R = Q [1 - h(e)] - Q_Eve h(e_x + e_y).
double key_rate(const SystemParams& params, double length_km);

// e_d1 = 4 p_d^2 (1-p_d)^2; e_d2 per topology (the proximal variant obeys
// e'_d2(L) = e_d2(L/2) for equal parameters).
DarkCountErrors dark_count_errors(const SystemParams& params, double length_km);

// e_tot = (e_d1 + 0.5 e_d2 + e Q) / (e_d1 + e_d2 + Q); e is the raw channel
// error at these params. Throws on an all-loss zero denominator.
double total_error(const SystemParams& params, double length_km, double e);

// R with dark counts: h(e) -> h(e_tot) in the gain term only; the Eve term
// keeps the raw channel error.
double key_rate_with_dark_counts(const SystemParams& params, double length_km);

// First zero crossing of R(L), found by a 1 km forward scan and bisection
// to 0.1 km; nullopt when R never changes sign up to 10^4 km.
std::optional<double> max_distance(const SystemParams& params);

// Per-basis flip threshold at L=0 via bisection on e_x (e_y tracks e_x) to
// 1e-4 resolution; returns P_th = 1 - e_x*.
double threshold_fidelity(const SystemParams& params);

// key_rate_with_dark_counts over a caller-specified grid; negative rates
// are clamped to zero in rate_clamped, raw values retained.
RateCurve rate_curve(const SystemParams& params, const std::vector<double>& grid_km);

} // namespace mdiqss
