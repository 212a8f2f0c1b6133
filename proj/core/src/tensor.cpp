// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "bispinor/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bispinor/errors.hpp"

namespace bispinor {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidDimension(std::string(what) + ": shape mismatch " +
                               std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                               std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

// Scatter the low bits of `value` into the positions set in `mask`, highest first.
std::size_t deposit_bits(std::size_t value, std::span<const std::size_t> positions) {
    std::size_t out = 0;
    const std::size_t k = positions.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((value >> (k - 1 - j)) & 1U) out |= std::size_t{1} << positions[j];
    }
    return out;
}

// Bit positions (LSB = 0) of the given qubits, in qubit order.
std::vector<std::size_t> bit_positions(const QubitSubset& qubits, std::size_t n) {
    std::vector<std::size_t> pos;
    pos.reserve(qubits.size());
    for (auto q : qubits) pos.push_back(n - 1 - q);
    return pos;
}

std::size_t checked_register(const ComplexMatrix& rho, const QubitSubset& subset, const char* what) {
    if (!rho.is_square()) throw InvalidDimension(std::string(what) + ": matrix is not square");
    const std::size_t n = qubit_count(rho.rows());
    if (!subset.empty() && subset.max_index() >= n) {
        throw InvalidDimension(std::string(what) + ": qubit " + std::to_string(subset.max_index()) +
                               " outside a " + std::to_string(n) + "-qubit register");
    }
    return n;
}

}  // namespace

// ---------------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InvalidDimension("ComplexMatrix: " + std::to_string(data_.size()) +
                               " entries for a " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InvalidDimension("ComplexMatrix: ragged row literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw InvalidDimension("hermiticity_defect: matrix is not square");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InvalidDimension("matrix product: inner dimensions " + std::to_string(a.cols()) +
                               " and " + std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

// ------------------------------------------------------------------ StateVector

StateVector::StateVector(std::vector<Complex> amplitudes)
    : num_qubits_(qubit_count(amplitudes.size())), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::zero_state(std::size_t num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) throw InvalidDimension("StateVector::basis: index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& z : amplitudes_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix StateVector::density() const {
    const std::size_t d = amplitudes_.size();
    ComplexMatrix rho(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) rho(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
    return rho;
}

StateVector& StateVector::operator+=(const StateVector& rhs) {
    if (rhs.amplitudes_.size() != amplitudes_.size())
        throw InvalidDimension("StateVector sum: register sizes differ");
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += rhs.amplitudes_[i];
    return *this;
}

StateVector& StateVector::operator*=(Complex s) {
    for (auto& z : amplitudes_) z *= s;
    return *this;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) throw InvalidDimension("inner: register sizes differ");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// ------------------------------------------------------------------ QubitSubset

QubitSubset::QubitSubset(std::initializer_list<std::size_t> indices)
    : QubitSubset(std::vector<std::size_t>(indices)) {}

QubitSubset::QubitSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw InvalidArgument("QubitSubset: duplicate qubit index");
}

bool QubitSubset::contains(std::size_t q) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), q);
}

std::size_t QubitSubset::mask(std::size_t num_qubits) const {
    std::size_t m = 0;
    for (auto q : indices_) {
        if (q >= num_qubits) throw InvalidDimension("QubitSubset::mask: qubit outside register");
        m |= std::size_t{1} << (num_qubits - 1 - q);
    }
    return m;
}

QubitSubset QubitSubset::complement(std::size_t num_qubits) const {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < num_qubits; ++q)
        if (!contains(q)) rest.push_back(q);
    return QubitSubset(std::move(rest));
}

QubitSubset QubitSubset::united(const QubitSubset& other) const {
    std::vector<std::size_t> all;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(all));
    return QubitSubset(std::move(all));
}

// ------------------------------------------------------------------- operations

std::size_t qubit_count(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim))
        throw InvalidDimension("dimension " + std::to_string(dim) + " is not a power of two");
    return static_cast<std::size_t>(std::countr_zero(dim));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
    std::vector<Complex> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t k = 0; k < b.dimension(); ++k) amps[i * b.dimension() + k] = a[i] * b[k];
    return StateVector(std::move(amps));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitSubset& keep) {
    const std::size_t n = checked_register(rho, keep, "partial_trace");
    if (keep.empty()) throw InvalidDimension("partial_trace: keep set is empty");
    const QubitSubset traced = keep.complement(n);
    const auto keep_pos = bit_positions(keep, n);
    const auto traced_pos = bit_positions(traced, n);
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dt = std::size_t{1} << traced.size();

    std::vector<std::size_t> keep_idx(dk), traced_idx(dt);
    for (std::size_t i = 0; i < dk; ++i) keep_idx[i] = deposit_bits(i, keep_pos);
    for (std::size_t t = 0; t < dt; ++t) traced_idx[t] = deposit_bits(t, traced_pos);

    ComplexMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Complex s = 0.0;
            for (std::size_t t = 0; t < dt; ++t) s += rho(keep_idx[i] | traced_idx[t], keep_idx[j] | traced_idx[t]);
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix partial_trace(const StateVector& psi, const QubitSubset& keep) {
    const std::size_t n = psi.num_qubits();
    if (keep.empty()) throw InvalidDimension("partial_trace: keep set is empty");
    if (keep.max_index() >= n) throw InvalidDimension("partial_trace: qubit outside register");
    const QubitSubset traced = keep.complement(n);
    const auto keep_pos = bit_positions(keep, n);
    const auto traced_pos = bit_positions(traced, n);
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dt = std::size_t{1} << traced.size();

    // Reshape psi into a dk x dt matrix M; rho_keep = M M^dagger.
    std::vector<Complex> m(dk * dt);
    for (std::size_t i = 0; i < dk; ++i) {
        const std::size_t ki = deposit_bits(i, keep_pos);
        for (std::size_t t = 0; t < dt; ++t) m[i * dt + t] = psi[ki | deposit_bits(t, traced_pos)];
    }
    ComplexMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = i; j < dk; ++j) {
            Complex s = 0.0;
            for (std::size_t t = 0; t < dt; ++t) s += m[i * dt + t] * std::conj(m[j * dt + t]);
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitSubset& side_a) {
    const std::size_t n = checked_register(rho, side_a, "partial_transpose");
    const std::size_t mask = side_a.mask(n);
    const std::size_t d = rho.rows();
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t rs = (r & ~mask) | (c & mask);
            const std::size_t cs = (c & ~mask) | (r & mask);
            out(r, c) = rho(rs, cs);
        }
    return out;
}

StateVector normalize(const StateVector& v) {
    const double nrm = v.norm();
    if (!(nrm > 1e-14)) throw ZeroNorm("normalize: vector norm " + std::to_string(nrm) + " is too small");
    StateVector out = v;
    out *= 1.0 / nrm;
    return out;
}

StateVector apply_local(const StateVector& psi, const ComplexMatrix& op, std::size_t first) {
    if (!op.is_square()) throw InvalidDimension("apply_local: operator is not square");
    const std::size_t k = qubit_count(op.rows());
    const std::size_t n = psi.num_qubits();
    if (first + k > n) throw InvalidDimension("apply_local: operator exceeds register");
    const std::size_t shift = n - first - k;  // bits below the block
    const std::size_t block = std::size_t{1} << k;
    const std::size_t low = std::size_t{1} << shift;
    const std::size_t high = std::size_t{1} << first;

    std::vector<Complex> out(psi.dimension());
    for (std::size_t h = 0; h < high; ++h)
        for (std::size_t l = 0; l < low; ++l) {
            const std::size_t base = (h << (k + shift)) | l;
            for (std::size_t r = 0; r < block; ++r) {
                Complex s = 0.0;
                for (std::size_t c = 0; c < block; ++c) s += op(r, c) * psi[base | (c << shift)];
                out[base | (r << shift)] = s;
            }
        }
    return StateVector(std::move(out));
}

}  // namespace bispinor
