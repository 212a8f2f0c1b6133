// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "bispinor/measures.hpp"

#include <algorithm>
#include <cmath>

#include "bispinor/errors.hpp"

namespace bispinor {

namespace {

// Positions of `sub` inside the sorted register `keep`.
QubitSubset relabel(const QubitSubset& sub, const QubitSubset& keep) {
    std::vector<std::size_t> idx;
    const auto k = keep.indices();
    for (auto q : sub) idx.push_back(static_cast<std::size_t>(std::lower_bound(k.begin(), k.end(), q) - k.begin()));
    return QubitSubset(std::move(idx));
}

double negativity_of_reduced(const ComplexMatrix& reduced, const Bipartition& part) {
    const QubitSubset keep = part.side_a().united(part.side_b());
    const ComplexMatrix pt = partial_transpose(reduced, relabel(part.side_a(), keep));
    double trace_norm = 0.0;
    for (double mu : hermitian_eigenvalues(pt))
        if (std::abs(mu) >= kEigenvalueClamp) trace_norm += std::abs(mu);
    const double d = std::ldexp(1.0, static_cast<int>(std::min(part.side_a().size(), part.side_b().size())));
    return std::clamp((trace_norm - 1.0) / (d - 1.0), 0.0, 1.0);
}

}  // namespace

Bipartition::Bipartition(std::size_t num_qubits, QubitSubset side_a, QubitSubset side_b)
    : num_qubits_(num_qubits), side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
    if (side_a_.empty() || side_b_.empty()) throw PartitionError("Bipartition: both sides must be nonempty");
    if (side_a_.max_index() >= num_qubits_ || side_b_.max_index() >= num_qubits_)
        throw PartitionError("Bipartition: qubit index outside the register");
    for (auto q : side_a_)
        if (side_b_.contains(q)) throw PartitionError("Bipartition: sides overlap");
    traced_ = side_a_.united(side_b_).complement(num_qubits_);
}

std::string Bipartition::label(const std::vector<std::string>& names) const {
    auto join = [&](const QubitSubset& s) {
        std::string out;
        for (auto q : s) out += q < names.size() ? names[q] : "q" + std::to_string(q);
        return out;
    };
    return join(side_a_) + ";" + join(side_b_);
}

std::string_view to_string(PartitionKind kind) noexcept {
    switch (kind) {
        case PartitionKind::OneVsRest: return "one_vs_rest";
        case PartitionKind::PairVsPair: return "pair_vs_pair";
        case PartitionKind::OneVsTwo: return "one_vs_two";
        case PartitionKind::OneVsOne: return "one_vs_one";
    }
    return "unknown";
}

double MeanNegativities::operator[](int k) const {
    switch (k) {
        case 1: return n1;
        case 2: return n2;
        case 3: return n3;
        case 4: return n4;
        default: throw InvalidArgument("MeanNegativities: index must be 1..4");
    }
}

double negativity(const ComplexMatrix& rho, const Bipartition& part) {
    if (!rho.is_square() || qubit_count(rho.rows()) != part.num_qubits())
        throw PartitionError("negativity: partition register does not match the density matrix");
    const QubitSubset keep = part.side_a().united(part.side_b());
    const ComplexMatrix reduced = part.traced().empty() ? rho : partial_trace(rho, keep);
    return negativity_of_reduced(reduced, part);
}

double negativity(const StateVector& psi, const Bipartition& part) {
    if (psi.num_qubits() != part.num_qubits())
        throw PartitionError("negativity: partition register does not match the state");
    const QubitSubset keep = part.side_a().united(part.side_b());
    return negativity_of_reduced(partial_trace(psi, keep), part);
}

double linear_entropy(const StateVector& psi, const QubitSubset& keep, double prefactor) {
    const ComplexMatrix rho = partial_trace(psi, keep);
    double purity = 0.0;
    for (const auto& z : rho.entries()) purity += std::norm(z);  // Tr rho^2 for Hermitian rho
    return prefactor * (1.0 - purity);
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t n, PartitionKind kind) {
    if (n < 2) throw PartitionError("enumerate_bipartitions: need at least two qubits");
    std::vector<Bipartition> out;
    switch (kind) {
        case PartitionKind::OneVsRest:
            for (std::size_t i = 0; i < n; ++i) out.emplace_back(n, QubitSubset{i}, QubitSubset{i}.complement(n));
            break;
        case PartitionKind::OneVsOne:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(n, QubitSubset{i}, QubitSubset{j});
            break;
        case PartitionKind::PairVsPair:
            if (n != 4) throw PartitionError("enumerate_bipartitions: pair_vs_pair is defined for 4 qubits");
            for (std::size_t j = 1; j < 4; ++j) {
                const QubitSubset a{0, j};
                out.emplace_back(n, a, a.complement(n));
            }
            break;
        case PartitionKind::OneVsTwo:
            if (n != 4) throw PartitionError("enumerate_bipartitions: one_vs_two is defined for 4 qubits");
            for (std::size_t t = 0; t < 4; ++t)
                for (std::size_t i = 0; i < 4; ++i) {
                    if (i == t) continue;
                    std::vector<std::size_t> rest;
                    for (std::size_t k = 0; k < 4; ++k)
                        if (k != t && k != i) rest.push_back(k);
                    out.emplace_back(n, QubitSubset{i}, QubitSubset(std::move(rest)));
                }
            break;
    }
    return out;
}

MeanNegativities mean_negativities(const StateVector& psi) {
    if (psi.num_qubits() != 4) throw PartitionError("mean_negativities: expects a four-qubit state");
    auto mean = [&](PartitionKind kind) {
        const auto parts = enumerate_bipartitions(4, kind);
        double s = 0.0;
        for (const auto& p : parts) s += negativity(psi, p);
        return s / static_cast<double>(parts.size());
    };
    return {mean(PartitionKind::OneVsRest), mean(PartitionKind::OneVsOne), mean(PartitionKind::OneVsTwo),
            mean(PartitionKind::PairVsPair)};
}

}  // namespace bispinor
