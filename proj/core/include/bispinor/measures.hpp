// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Negativity, linear entropy and the bipartition taxonomy of a register.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bispinor/tensor.hpp"

namespace bispinor {

/// Split of an n-qubit register into side A, side B and traced-out qubits.
class Bipartition {
public:
    /// `traced` is the complement of A u B. Throws PartitionError if A or B
    /// is empty, the sides overlap, or an index lies outside the register.
    Bipartition(std::size_t num_qubits, QubitSubset side_a, QubitSubset side_b);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const QubitSubset& side_a() const noexcept { return side_a_; }
    [[nodiscard]] const QubitSubset& side_b() const noexcept { return side_b_; }
    [[nodiscard]] const QubitSubset& traced() const noexcept { return traced_; }
    [[nodiscard]] Bipartition swapped() const { return {num_qubits_, side_b_, side_a_}; }

    /// e.g. "S1;P1P2S2" given qubit names {"P1","S1","P2","S2"}.
    [[nodiscard]] std::string label(const std::vector<std::string>& names) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::size_t num_qubits_;
    QubitSubset side_a_;
    QubitSubset side_b_;
    QubitSubset traced_;
};

enum class PartitionKind { OneVsRest, PairVsPair, OneVsTwo, OneVsOne };

std::string_view to_string(PartitionKind kind) noexcept;

/// Mean negativity per partition type of a four-qubit register.
struct MeanNegativities {
    double n1 = 0.0;  ///< {i; jkl}
    double n2 = 0.0;  ///< {i; j}
    double n3 = 0.0;  ///< {i; jk}
    double n4 = 0.0;  ///< {ij; kl}

    [[nodiscard]] double operator[](int k) const;
};

/// Eigenvalues of the partial transpose below this magnitude count as zero.
inline constexpr double kEigenvalueClamp = 1e-12;

/**
 * (sum_i |mu_i| - 1) / (d - 1), with mu_i the spectrum of the partial
 * transpose over side A of the state reduced to A u B, and d the dimension
 * of the smaller side. Clamped to [0, 1].
 */
double negativity(const ComplexMatrix& rho, const Bipartition& part);
double negativity(const StateVector& psi, const Bipartition& part);

/// prefactor * (1 - Tr rho_keep^2); the default prefactor 2 gives sin^2(2 theta)
/// for the particle reduction of a two-term Bell-like superposition.
double linear_entropy(const StateVector& psi, const QubitSubset& keep, double prefactor = 2.0);

/// All bipartitions of one type. OneVsRest and OneVsOne accept any n >= 2;
/// PairVsPair and OneVsTwo are defined for n = 4 only.
std::vector<Bipartition> enumerate_bipartitions(std::size_t num_qubits, PartitionKind kind);

/// Averages of negativity over each of the four partition types (n = 4).
MeanNegativities mean_negativities(const StateVector& psi);

}  // namespace bispinor
