// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations built on Eigen. Nothing here calls into the
// library's linear algebra, so agreement is a genuine cross-check.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "bispinor/tensor.hpp"

namespace oracle {

using Cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline Vec to_eigen(const bispinor::StateVector& v) {
    Vec out(static_cast<Eigen::Index>(v.dimension()));
    for (std::size_t i = 0; i < v.dimension(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

inline Mat to_eigen(const bispinor::ComplexMatrix& m) {
    Mat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    return out;
}

inline bispinor::ComplexMatrix from_eigen(const Mat& m) {
    bispinor::ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    return out;
}

inline Mat pauli(int i) {
    Mat s(2, 2);
    switch (i) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, Cd(0, -1), Cd(0, 1), 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

inline Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }
inline Vec kron(const Vec& a, const Vec& b) { return Eigen::kroneckerProduct(a, b).eval(); }

/// alpha_i written as 4x4 block matrices [[0, sigma_i], [sigma_i, 0]].
inline Mat alpha(int i) {
    Mat a = Mat::Zero(4, 4);
    a.block(0, 2, 2, 2) = pauli(i + 1);
    a.block(2, 0, 2, 2) = pauli(i + 1);
    return a;
}

inline Mat beta() {
    Mat b = Mat::Zero(4, 4);
    b.block(0, 0, 2, 2) = Mat::Identity(2, 2);
    b.block(2, 2, 2, 2) = -Mat::Identity(2, 2);
    return b;
}

inline Mat hamiltonian(const std::array<double, 3>& p, double m) {
    return p[0] * alpha(0) + p[1] * alpha(1) + p[2] * alpha(2) + m * beta();
}

/// exp(omega/2 n.alpha) by the matrix exponential.
inline Mat boost(double omega, const std::array<double, 3>& n) {
    const Mat g = 0.5 * omega * (n[0] * alpha(0) + n[1] * alpha(1) + n[2] * alpha(2));
    return g.exp();
}

/// Positive-energy projector applied to (chi_s, 0); chi_+ = (1,0), chi_- = (0,1).
inline Vec spinor_u(const std::array<double, 3>& p, int s, double m = 1.0) {
    const double e = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    Vec seed = Vec::Zero(4);
    seed(s > 0 ? 0 : 1) = 1.0;
    const Vec u = (hamiltonian(p, m) + e * Mat::Identity(4, 4)) * seed;
    return u / u.norm();
}

/// Negative-energy projector applied to (0, chi_s).
inline Vec spinor_v(const std::array<double, 3>& p, int s, double m = 1.0) {
    const double e = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    Vec seed = Vec::Zero(4);
    seed(s > 0 ? 2 : 3) = 1.0;
    const Vec v = (e * Mat::Identity(4, 4) - hamiltonian(p, m)) * seed;
    return v / v.norm();
}

inline int bit(std::size_t index, int n, int q) { return static_cast<int>((index >> (n - 1 - q)) & 1U); }

/// Reduced operator on the listed qubits (in that order) by explicit summation over traced indices.
inline Mat reduce(const Mat& rho, int n, const std::vector<int>& keep) {
    const Eigen::Index d = Eigen::Index{1} << keep.size();
    std::size_t kept_mask = 0;
    for (int x : keep) kept_mask |= std::size_t{1} << (n - 1 - x);
    Mat out = Mat::Zero(d, d);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            if ((static_cast<std::size_t>(i) & ~kept_mask) != (static_cast<std::size_t>(j) & ~kept_mask)) continue;
            Eigen::Index r = 0, c = 0;
            for (int x : keep) {
                r = 2 * r + bit(static_cast<std::size_t>(i), n, x);
                c = 2 * c + bit(static_cast<std::size_t>(j), n, x);
            }
            out(r, c) += rho(i, j);
        }
    }
    return out;
}

inline Mat reduced_density(const Vec& psi, int n, const std::vector<int>& keep) {
    return reduce(psi * psi.adjoint(), n, keep);
}

/// Transposes the listed positions of a k-qubit operator.
inline Mat partial_transpose(const Mat& rho, int k, const std::vector<int>& positions) {
    Mat out(rho.rows(), rho.cols());
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            Eigen::Index r2 = r, c2 = c;
            for (int q : positions) {
                const Eigen::Index m = Eigen::Index{1} << (k - 1 - q);
                const bool rb = (r & m) != 0, cb = (c & m) != 0;
                r2 = (r2 & ~m) | (cb ? m : 0);
                c2 = (c2 & ~m) | (rb ? m : 0);
            }
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

/// Negativity of rho (k qubits) across positions `a` vs `b`; other positions are traced first.
inline double negativity(const Mat& rho_full, int k, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> keep = a;
    keep.insert(keep.end(), b.begin(), b.end());
    const Mat rho = reduce(rho_full, k, keep);
    std::vector<int> positions(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) positions[i] = static_cast<int>(i);
    const Mat pt = partial_transpose(rho, static_cast<int>(keep.size()), positions);
    Eigen::SelfAdjointEigenSolver<Mat> es(pt, Eigen::EigenvaluesOnly);
    const double trace_norm = es.eigenvalues().cwiseAbs().sum();
    const double dim = std::pow(2.0, static_cast<double>(std::min(a.size(), b.size())));
    return std::max(0.0, (trace_norm - 1.0) / (dim - 1.0));
}

inline double negativity(const Vec& psi, int n, const std::vector<int>& a, const std::vector<int>& b) {
    return negativity(Mat(psi * psi.adjoint()), n, a, b);
}

/// cos(theta) u(p,+) u(q,-) + sin(theta) u(p,-) u(q,+), each bispinor boosted by `s`.
inline Vec bell_pair(const std::array<double, 3>& p, const std::array<double, 3>& q, double theta, const Mat& s) {
    Vec psi = std::cos(theta) * kron(Vec(s * spinor_u(p, +1)), Vec(s * spinor_u(q, -1))) +
              std::sin(theta) * kron(Vec(s * spinor_u(p, -1)), Vec(s * spinor_u(q, +1)));
    return psi / psi.norm();
}

}  // namespace oracle
