// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor.hpp
 * @brief Dense complex linear algebra over qubit registers.
 *
 * Qubit convention used by every routine in this library: qubit 0 is the
 * most significant bit of a basis-state index, so tensor factors appear in
 * declaration order (index = b_0 b_1 ... b_{n-1} in binary).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bispinor {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. `{{0, 1}, {1, 0}}`.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    /// Largest |m_ij - conj(m_ji)|; zero for exactly Hermitian input.
    [[nodiscard]] double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pure state of an n-qubit register.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amplitudes);
    /// |0...0> on n qubits.
    static StateVector zero_state(std::size_t num_qubits);
    /// Computational basis state |index> on n qubits.
    static StateVector basis(std::size_t num_qubits, std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    Complex& operator[](std::size_t i) noexcept { return amplitudes_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

    [[nodiscard]] double norm() const;
    /// |psi><psi|
    [[nodiscard]] ComplexMatrix density() const;

    StateVector& operator+=(const StateVector& rhs);
    StateVector& operator*=(Complex s);
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator*(Complex s, StateVector a) { return a *= s; }

private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// <a|b>
Complex inner(const StateVector& a, const StateVector& b);

/// Strictly increasing list of qubit positions.
class QubitSubset {
public:
    QubitSubset() = default;
    /// Sorts the input; throws InvalidArgument on duplicates.
    QubitSubset(std::initializer_list<std::size_t> indices);
    explicit QubitSubset(std::vector<std::size_t> indices);

    [[nodiscard]] std::span<const std::size_t> indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    [[nodiscard]] bool contains(std::size_t q) const noexcept;
    [[nodiscard]] std::size_t max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }
    /// Bit mask over an n-qubit index (qubit 0 = MSB).
    [[nodiscard]] std::size_t mask(std::size_t num_qubits) const;
    [[nodiscard]] QubitSubset complement(std::size_t num_qubits) const;
    [[nodiscard]] QubitSubset united(const QubitSubset& other) const;

    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }

    friend bool operator==(const QubitSubset&, const QubitSubset&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// Number of qubits n such that dim == 2^n; throws InvalidDimension otherwise.
std::size_t qubit_count(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

/// Reduced density matrix on `keep`, tracing every other qubit.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitSubset& keep);

/// Reduced density matrix of a pure state, without forming |psi><psi|.
ComplexMatrix partial_trace(const StateVector& psi, const QubitSubset& keep);

/// Transposes the multi-index of the qubits in `side_a`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitSubset& side_a);

/// Ascending eigenvalues of a Hermitian matrix (cyclic complex Jacobi).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

StateVector normalize(const StateVector& v);

/// Applies a 2^k x 2^k operator to the consecutive qubits [first, first + k).
StateVector apply_local(const StateVector& psi, const ComplexMatrix& op, std::size_t first);

}  // namespace bispinor
