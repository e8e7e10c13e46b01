#include "mdiqss/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdiqss/channel.hpp"
#include "mdiqss/roots.hpp"

namespace mdiqss {

void SystemParams::validate() const {
    det.validate();
    if (!(alpha_db_per_km >= 0.0))
        throw std::invalid_argument("SystemParams: negative loss rate");
    if (!(e_x >= 0.0 && e_x <= 0.5) || !(e_y >= 0.0 && e_y <= 0.5))
        throw std::invalid_argument("SystemParams: flip probabilities outside [0, 1/2]");
    if (e_x + e_y > 0.5)
        throw std::invalid_argument("SystemParams: e_x + e_y beyond the security bound's validity region");
    if (!(q_eve_scale >= 0.0))
        throw std::invalid_argument("SystemParams: negative q_eve_scale");
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("binary_entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double holevo_bound(double e_x, double e_y, double q_eve) {
    if (!(e_x >= 0.0) || !(e_y >= 0.0) || e_x + e_y > 0.5)
        throw std::invalid_argument("holevo_bound: e_x + e_y outside [0, 1/2]");
    return q_eve * binary_entropy(e_x + e_y);
}

HermitianMatrix gram_matrix(double beta) {
    const double b = beta;
    const cplx i{0.0, 1.0};
    const cplx d{2.0, 0.0};       // diagonal
    const cplx mb{-2.0 * b, 0.0}; // -2 beta
    const cplx pb{1.0 + b, 0.0};  // 1 + beta
    const cplx ib = i * (1.0 - b); // i (1 - beta), alpha = 0 throughout

    // upper-right 4x4 block of the Appendix-A matrix; the lower-left block
    // is its conjugate transpose and both diagonal blocks are identical.
    const std::array<std::array<cplx, 4>, 4> corner{{
        {pb, ib, ib, -pb},
        {ib, pb, -pb, ib},
        {ib, -pb, pb, ib},
        {-pb, ib, ib, pb},
    }};
    const std::array<std::array<cplx, 4>, 4> block{{
        {d, 0, 0, mb},
        {0, d, mb, 0},
        {0, mb, d, 0},
        {mb, 0, 0, d},
    }};

    HermitianMatrix g{8, std::vector<cplx>(64)};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            g.at(r, c) = block[r][c] / 16.0;
            g.at(r + 4, c + 4) = block[r][c] / 16.0;
            g.at(r, c + 4) = corner[r][c] / 16.0;
            g.at(c + 4, r) = std::conj(corner[r][c]) / 16.0;
        }
    }
    return g;
}

GramSpectrum gram_spectrum(double beta) {
    if (!(beta >= -1.0 && beta <= 1.0))
        throw std::invalid_argument("gram_spectrum: beta outside [-1,1]");
    const auto ev = hermitian_eigenvalues(gram_matrix(beta));
    GramSpectrum s;
    s.beta = beta;
    std::copy(ev.begin(), ev.end(), s.eigenvalues.begin());
    s.entropy_bits = 0.0;
    for (double lambda : ev)
        if (lambda > 1e-15) s.entropy_bits -= lambda * std::log2(lambda);
    return s;
}

std::pair<GramSpectrum, double> gram_holevo(double e_x, double e_y) {
    if (!(e_x >= 0.0) || !(e_y >= 0.0) || e_x + e_y > 0.5)
        throw std::invalid_argument("gram_holevo: e_x + e_y outside [0, 1/2]");
    const double lo = 1.0 - 2.0 * e_x - 2.0 * e_y;
    const double hi = std::min(1.0, 1.0 + 2.0 * e_x - 2.0 * e_y);

    constexpr int kGridPoints = 41;
    GramSpectrum best = gram_spectrum(lo);
    for (int k = 1; k < kGridPoints; ++k) {
        const double beta = lo + (hi - lo) * k / (kGridPoints - 1);
        GramSpectrum s = gram_spectrum(beta);
        if (s.entropy_bits > best.entropy_bits) best = s;
    }
    return {best, best.entropy_bits - 1.0};
}

double segment_transmittance(const SystemParams& params, double length_km) {
    if (!(length_km >= 0.0))
        throw std::invalid_argument("segment_transmittance: negative distance");
    return std::pow(10.0, -params.alpha_db_per_km * length_km / 10.0);
}

double pair_efficiency(const SystemParams& params, double length_km) {
    return coincidence_efficiency(params.det,
                                  segment_transmittance(params, length_km),
                                  params.topology);
}

double key_rate(const SystemParams& params, double length_km) {
    params.validate();
    const double q = pair_efficiency(params, length_km);
    const double e = end_to_end_error(params.e_x, params.e_y);
    return q * (1.0 - binary_entropy(e)) -
           holevo_bound(params.e_x, params.e_y, params.q_eve_scale * q);
}

DarkCountErrors dark_count_errors(const SystemParams& params, double length_km) {
    const double pd = params.det.p_dark;
    const double t = segment_transmittance(params, length_km);
    // per-photon transmittance over the full path
    const double tp = params.topology == Topology::Symmetric ? t * t : t;
    DarkCountErrors d;
    d.e_d1 = 4.0 * pd * pd * (1.0 - pd) * (1.0 - pd);
    d.e_d2 = 4.0 * tp * params.det.eta_analyzer * params.det.eta_det * pd *
             (1.0 - pd) * (1.0 - pd) * (1.0 - tp * params.det.eta_det);
    return d;
}

double total_error(const SystemParams& params, double length_km, double e) {
    const auto [ed1, ed2] = dark_count_errors(params, length_km);
    const double q = pair_efficiency(params, length_km);
    const double denom = ed1 + ed2 + q;
    if (denom <= 0.0)
        throw std::domain_error("total_error: zero denominator (all-loss degenerate case)");
    return (ed1 + 0.5 * ed2 + e * q) / denom;
}

double key_rate_with_dark_counts(const SystemParams& params, double length_km) {
    params.validate();
    const double q = pair_efficiency(params, length_km);
    const double e = end_to_end_error(params.e_x, params.e_y);
    if (e > 0.5)
        throw std::domain_error("key_rate_with_dark_counts: channel error beyond 1/2");
    const double e_tot = total_error(params, length_km, e);
    return q * (1.0 - binary_entropy(e_tot)) -
           holevo_bound(params.e_x, params.e_y, params.q_eve_scale * q);
}

std::optional<double> max_distance(const SystemParams& params) {
    params.validate();
    const auto rate = [&](double L) { return key_rate_with_dark_counts(params, L); };
    if (!(rate(0.0) > 0.0)) return std::nullopt;
    // A 1 km scan rather than bracket doubling: in the dark-count regime
    // R(L) re-positivises past the crossing and doubling can step over the
    // whole negative window.
    const auto bracket = scan_first_sign_change(rate, 0.0, 1e4, 1.0);
    if (!bracket) return std::nullopt;
    return bisect(rate, bracket->first, bracket->second, 0.1);
}

double threshold_fidelity(const SystemParams& params) {
    params.validate();
    SystemParams p = params;
    const auto rate_at = [&](double ex) {
        p.e_x = ex;
        p.e_y = ex;
        return key_rate_with_dark_counts(p, 0.0);
    };
    if (!(rate_at(1e-9) > 0.0))
        throw std::domain_error("threshold_fidelity: rate not positive at zero error");
    const double ex_star = bisect(rate_at, 1e-9, 0.25, 1e-4);
    return 1.0 - ex_star;
}

RateCurve rate_curve(const SystemParams& params, const std::vector<double>& grid_km) {
    if (grid_km.empty())
        throw std::invalid_argument("rate_curve: empty distance grid");
    params.validate();
    RateCurve curve;
    curve.params = params;
    curve.points.reserve(grid_km.size());
    const double e = end_to_end_error(params.e_x, params.e_y);
    for (double L : grid_km) {
        RatePoint pt;
        pt.length_km = L;
        pt.q = pair_efficiency(params, L);
        pt.e_tot = total_error(params, L, e);
        pt.rate_raw = key_rate_with_dark_counts(params, L);
        pt.rate_clamped = std::max(0.0, pt.rate_raw);
        curve.points.push_back(pt);
    }
    return curve;
}

} // namespace mdiqss
