// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
//
// Each rotation J = P R zeroes one off-diagonal pair: P = diag(1, e^{-i phi})
// on (p, q) makes a_pq real and R is the classical real Jacobi rotation.
// A <- J^dagger A J keeps A Hermitian, and the sweep stops once the
// off-diagonal Frobenius norm drops below 1e-13 (relative to ||A||_F when
// that exceeds one).

#include <algorithm>
#include <cmath>
#include <string>

#include "bispinor/errors.hpp"
#include "bispinor/tensor.hpp"

namespace bispinor {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = std::conj(apq) / mag;  // e^{-i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // J_pp = c, J_pq = s, J_qp = -s e^{-i phi}, J_qq = c e^{-i phi}
    const Complex jpp = c;
    const Complex jpq = s;
    const Complex jqp = -s * phase;
    const Complex jqq = c * phase;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A J
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // J^dagger (A J)
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw InvalidDimension("hermitian_eigenvalues: matrix is not square");
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTolerance)
        throw NotHermitian("hermitian_eigenvalues: Hermiticity defect " + std::to_string(defect));

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize away the sub-tolerance defect so rotations see an exact Hermitian matrix.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    const double tol = kOffDiagonalTolerance * std::max(1.0, a.frobenius_norm());
    int sweep = 0;
    while (off_diagonal_norm(a) >= tol) {
        if (++sweep > kMaxSweeps)
            throw ConvergenceFailure("hermitian_eigenvalues: no convergence after " +
                                     std::to_string(kMaxSweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace bispinor
