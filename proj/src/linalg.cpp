#include "mdiqss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdiqss {

namespace {

double off_diagonal_norm(const HermitianMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += 2.0 * std::norm(m.at(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation eliminating the (p,q) entry of a Hermitian matrix.
// With a_pq = r e^{i phi}, the unitary J acts on the (p,q) plane as
//   J = [ c          -s e^{i phi} ]
//       [ s e^{-phi}  c          ]
// and tan(2 theta) = 2 r / (a_pp - a_qq), the stable-root convention.
void rotate(HermitianMatrix& m, int p, int q) {
    const std::complex<double> apq = m.at(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const std::complex<double> phase = apq / r;

    const double app = m.at(p, p).real();
    const double aqq = m.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::complex<double> sp = s * phase;        // s e^{i phi}
    const std::complex<double> spc = std::conj(sp);   // s e^{-i phi}

    // columns: A <- A J
    for (int k = 0; k < m.n; ++k) {
        const std::complex<double> akp = m.at(k, p);
        const std::complex<double> akq = m.at(k, q);
        m.at(k, p) = c * akp + spc * akq;
        m.at(k, q) = -sp * akp + c * akq;
    }
    // rows: A <- J^dag A
    for (int k = 0; k < m.n; ++k) {
        const std::complex<double> apk = m.at(p, k);
        const std::complex<double> aqk = m.at(q, k);
        m.at(p, k) = c * apk + sp * aqk;
        m.at(q, k) = -spc * apk + c * aqk;
    }
    // clean up rounding drift on the pivot pair
    m.at(p, q) = 0.0;
    m.at(q, p) = 0.0;
    m.at(p, p) = m.at(p, p).real();
    m.at(q, q) = m.at(q, q).real();
}

} // namespace

std::vector<double> hermitian_eigenvalues(HermitianMatrix m, double off_tol) {
    if (m.n <= 0 || m.a.size() != static_cast<std::size_t>(m.n) * m.n)
        throw std::invalid_argument("hermitian_eigenvalues: bad dimensions");
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > 1e-12)
                throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(m) < off_tol) break;
        for (int p = 0; p < m.n - 1; ++p)
            for (int q = p + 1; q < m.n; ++q) rotate(m, p, q);
    }
    if (off_diagonal_norm(m) >= off_tol)
        throw std::runtime_error("hermitian_eigenvalues: Jacobi sweeps did not converge");

    std::vector<double> ev(m.n);
    for (int i = 0; i < m.n; ++i) ev[i] = m.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace mdiqss
