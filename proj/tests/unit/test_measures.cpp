// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "bispinor/errors.hpp"
#include "bispinor/measures.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace bispinor;
using testing_support::random_state;
using testing_support::random_unitary2;

namespace {

std::vector<int> as_ints(const QubitSubset& s) { return {s.begin(), s.end()}; }

double oracle_negativity(const StateVector& psi, const Bipartition& part) {
    return oracle::negativity(oracle::to_eigen(psi), static_cast<int>(psi.num_qubits()), as_ints(part.side_a()),
                              as_ints(part.side_b()));
}

StateVector bell_pair_on(std::size_t n, std::size_t a, std::size_t b) {
    // (|0..0> + |..1_a..1_b..>)/sqrt2
    const std::size_t idx = (std::size_t{1} << (n - 1 - a)) | (std::size_t{1} << (n - 1 - b));
    return normalize(StateVector::basis(n, 0) + StateVector::basis(n, idx));
}

using Split = std::pair<std::set<std::size_t>, std::set<std::size_t>>;

// Every (A, B) with |A| = a, |B| = b, disjoint, drawn from 4 qubits; unordered when a == b.
std::set<Split> brute_force_splits(std::size_t a, std::size_t b) {
    std::set<Split> out;
    for (unsigned ma = 1; ma < 16; ++ma) {
        for (unsigned mb = 1; mb < 16; ++mb) {
            if ((ma & mb) != 0 || std::popcount(ma) != static_cast<int>(a) || std::popcount(mb) != static_cast<int>(b))
                continue;
            std::set<std::size_t> sa, sb;
            for (std::size_t q = 0; q < 4; ++q) {
                if (ma & (1U << q)) sa.insert(q);
                if (mb & (1U << q)) sb.insert(q);
            }
            if (a == b && sb < sa) std::swap(sa, sb);
            out.insert({sa, sb});
        }
    }
    return out;
}

std::set<Split> as_splits(const std::vector<Bipartition>& parts, bool unordered) {
    std::set<Split> out;
    for (const auto& p : parts) {
        std::set<std::size_t> sa(p.side_a().begin(), p.side_a().end()), sb(p.side_b().begin(), p.side_b().end());
        if (unordered && sb < sa) std::swap(sa, sb);
        out.insert({sa, sb});
    }
    return out;
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("bipartition validation and labels") {
    CHECK_THROWS_AS(Bipartition(4, {}, {1}), PartitionError);
    CHECK_THROWS_AS(Bipartition(4, {0, 1}, {1, 2}), PartitionError);
    CHECK_THROWS_AS(Bipartition(4, {0}, {4}), PartitionError);
    const Bipartition p(4, {1}, {0, 2, 3});
    CHECK(p.traced().empty());
    CHECK(p.label({"P1", "S1", "P2", "S2"}) == "S1;P1P2S2");
    CHECK(Bipartition(4, {1}, {3}).traced() == QubitSubset{0, 2});
    CHECK(p.swapped().side_a() == QubitSubset{0, 2, 3});
}

TEST_CASE("textbook states") {
    CHECK(negativity(bell_pair_on(2, 0, 1), Bipartition(2, {0}, {1})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(negativity(StateVector::basis(3, 5), Bipartition(3, {0}, {1, 2})) == 0.0);
    // GHZ: every cut of the pure state is maximal, every two-qubit marginal is separable.
    const StateVector ghz = normalize(StateVector::basis(4, 0) + StateVector::basis(4, 15));
    CHECK(negativity(ghz, Bipartition(4, {0}, {1, 2, 3})) == doctest::Approx(1.0));
    CHECK(negativity(ghz, Bipartition(4, {0, 1}, {2, 3})) == doctest::Approx(1.0 / 3.0));
    CHECK(negativity(ghz, Bipartition(4, {0}, {1})) == 0.0);
    // W state marginal: N = (sqrt5 - 1)/3 with the (sum|mu| - 1)/(d - 1) normalization.
    const StateVector w = normalize(StateVector::basis(3, 1) + StateVector::basis(3, 2) + StateVector::basis(3, 4));
    CHECK(negativity(w, Bipartition(3, {0}, {1})) == doctest::Approx((std::sqrt(5.0) - 1.0) / 3.0).epsilon(1e-13));
}

TEST_CASE("negativity agrees with the Eigen pipeline on random states") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const StateVector psi = random_state(4, rng);
        for (const PartitionKind kind :
             {PartitionKind::OneVsRest, PartitionKind::OneVsOne, PartitionKind::OneVsTwo, PartitionKind::PairVsPair}) {
            for (const auto& part : enumerate_bipartitions(4, kind)) {
                const double got = negativity(psi, part);
                CHECK(std::abs(got - oracle_negativity(psi, part)) < 1e-12);
                CHECK(std::abs(got - negativity(psi.density(), part)) < 1e-12);
                CHECK(std::abs(got - negativity(psi, part.swapped())) < 1e-12);
                CHECK(got >= 0.0);
                CHECK(got <= 1.0);
            }
        }
    }
}

TEST_CASE("one-vs-rest negativity from the Schmidt spectrum") {
    // For a pure state cut A|B with d = 2: N = (sum sqrt(lambda))^2 - 1.
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector psi = random_state(5, rng);
        const oracle::Mat rho_a = oracle::reduced_density(oracle::to_eigen(psi), 5, {2});
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(rho_a, Eigen::EigenvaluesOnly);
        double s = 0.0;
        for (Eigen::Index i = 0; i < 2; ++i) s += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
        CHECK(negativity(psi, Bipartition(5, {2}, {0, 1, 3, 4})) == doctest::Approx(s * s - 1.0).epsilon(1e-11));
    }
}

TEST_CASE("local unitaries leave negativity unchanged") {
    std::mt19937_64 rng(23);
    const StateVector psi = random_state(4, rng);
    StateVector rotated = psi;
    for (std::size_t q = 0; q < 4; ++q) rotated = apply_local(rotated, random_unitary2(rng), q);
    for (const auto& part : enumerate_bipartitions(4, PartitionKind::OneVsTwo))
        CHECK(std::abs(negativity(psi, part) - negativity(rotated, part)) < 1e-12);
    for (const auto& part : enumerate_bipartitions(4, PartitionKind::PairVsPair))
        CHECK(std::abs(negativity(psi, part) - negativity(rotated, part)) < 1e-12);
}

TEST_CASE("partition enumeration matches brute force") {
    CHECK(as_splits(enumerate_bipartitions(4, PartitionKind::OneVsRest), false) == brute_force_splits(1, 3));
    CHECK(as_splits(enumerate_bipartitions(4, PartitionKind::OneVsTwo), false) == brute_force_splits(1, 2));
    CHECK(as_splits(enumerate_bipartitions(4, PartitionKind::OneVsOne), true) == brute_force_splits(1, 1));
    CHECK(as_splits(enumerate_bipartitions(4, PartitionKind::PairVsPair), true) == brute_force_splits(2, 2));
    CHECK(enumerate_bipartitions(4, PartitionKind::OneVsRest).size() == 4);
    CHECK(enumerate_bipartitions(4, PartitionKind::OneVsOne).size() == 6);
    CHECK(enumerate_bipartitions(4, PartitionKind::OneVsTwo).size() == 12);
    CHECK(enumerate_bipartitions(4, PartitionKind::PairVsPair).size() == 3);
    CHECK(enumerate_bipartitions(3, PartitionKind::OneVsOne).size() == 3);
    CHECK_THROWS_AS(enumerate_bipartitions(3, PartitionKind::PairVsPair), PartitionError);
}

TEST_CASE("mean negativities average the oracle values") {
    std::mt19937_64 rng(24);
    const StateVector psi = random_state(4, rng);
    const MeanNegativities m = mean_negativities(psi);
    const PartitionKind kinds[] = {PartitionKind::OneVsRest, PartitionKind::OneVsOne, PartitionKind::OneVsTwo,
                                   PartitionKind::PairVsPair};
    for (int k = 0; k < 4; ++k) {
        const auto parts = enumerate_bipartitions(4, kinds[k]);
        double sum = 0.0;
        for (const auto& p : parts) sum += oracle_negativity(psi, p);
        CHECK(m[k + 1] == doctest::Approx(sum / static_cast<double>(parts.size())).epsilon(1e-12));
    }
    CHECK_THROWS_AS(mean_negativities(random_state(3, rng)), PartitionError);
}

TEST_CASE("linear entropy") {
    CHECK(linear_entropy(StateVector::basis(4, 3), QubitSubset{0, 1}) == doctest::Approx(0.0));
    for (double theta : {0.0, 0.2, 0.7854, 1.3}) {
        // cos|0101> + sin|1010> over qubit pairs (0,1) and (2,3).
        const StateVector psi =
            Complex(std::cos(theta)) * StateVector::basis(4, 0b0110) + Complex(std::sin(theta)) * StateVector::basis(4, 0b1001);
        CHECK(linear_entropy(psi, QubitSubset{0, 1}) == doctest::Approx(std::pow(std::sin(2 * theta), 2)).epsilon(1e-13));
    }
}

}  // TEST_SUITE
