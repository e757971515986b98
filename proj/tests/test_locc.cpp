#include <doctest.h>

#include <cmath>

#include "mmeslab/locc.hpp"
#include "mmeslab/measures.hpp"
#include "mmeslab/mmes.hpp"
#include "mmeslab/qmat.hpp"

using namespace mmeslab;

TEST_SUITE("locc") {

TEST_CASE("generalized Hadamard at d = 2, alpha = 0 is the Fourier matrix") {
    const Matrix h = gen_hadamard(0, 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h(0, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(0, 1) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(1, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(1, 1) - Complex(-r, 0)) < 1e-12);
}

TEST_CASE("generalized Hadamards are unitary for every alpha") {
    for (int d : {2, 3, 5})
        for (int alpha = 0; alpha < d; ++alpha) {
            const Matrix h = gen_hadamard(alpha, d);
            CHECK((h.adjoint() * h - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
            const Matrix hp = gen_hadamard_block(alpha, d);
            CHECK((hp.adjoint() * hp - Matrix::Identity(2 * d, 2 * d)).cwiseAbs().maxCoeff() <
                  1e-10);
        }
}

TEST_CASE("different alphas differ only by a diagonal column phase") {
    const int d = 3;
    const Matrix h1 = gen_hadamard(1, d);
    const Matrix h2 = gen_hadamard(2, d);
    for (int k = 0; k < d; ++k) {
        const Complex ratio = h2(0, k) / h1(0, k);
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
        for (int j = 1; j < d; ++j) CHECK(std::abs(h2(j, k) / h1(j, k) - ratio) < 1e-12);
    }
}

TEST_CASE("chi states") {
    const DensityMatrix chi00 = chi_state({0, 0, 2});
    // Equal mixture of the two family seeds: diagonal 1/4 on |00>, |11>, |02>, |13>.
    const BipartiteShape shape{2, 4};
    CHECK(chi00.matrix(shape.flat(0, 0), shape.flat(0, 0)).real() == doctest::Approx(0.25));
    CHECK(chi00.matrix(shape.flat(0, 2), shape.flat(0, 2)).real() == doctest::Approx(0.25));
    CHECK(chi00.matrix(shape.flat(0, 0), shape.flat(1, 1)).real() == doctest::Approx(0.25));
    CHECK(chi00.matrix(shape.flat(0, 2), shape.flat(1, 3)).real() == doctest::Approx(0.25));
    CHECK(std::abs(chi00.matrix(shape.flat(0, 0), shape.flat(0, 2))) < 1e-15);

    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            const DensityMatrix chi = chi_state({s, t, 2});
            CHECK(is_mmes(chi, Subsystem::A, 1e-8).verdict);
            CHECK(negativity(chi) == doctest::Approx(0.5).epsilon(1e-10));
        }
}

TEST_CASE("chi states are U_st conjugates of the seed") {
    for (int d : {2, 3})
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t) {
                const Matrix u = weyl_unitary({s, t, d});
                const Matrix lifted = tensor_product(u, Matrix::Identity(2 * d, 2 * d));
                const Matrix expected =
                    lifted * chi_state({0, 0, d}).matrix * lifted.adjoint();
                CHECK((chi_state({s, t, d}).matrix - expected).cwiseAbs().maxCoeff() < 1e-10);
            }
}

TEST_CASE("transpose transport identity holds for all labels") {
    for (int d : {2, 3}) {
        for (int j = 0; j < d; ++j)
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t)
                    for (int family : {1, 2})
                        CHECK(ricochet_check(j, {s, t, d}, family) < 1e-10);
    }
}

TEST_CASE("negative controls for the transport identity") {
    // Omitting the transpose breaks it badly. (At d = 2 every H_alpha is real
    // symmetric, so the control needs d = 3 with a nontrivial column phase.)
    CHECK(ricochet_check(1, {0, 1, 3}, 1, RicochetForm::WrongSide) > 0.1);
    CHECK(ricochet_check(2, {1, 2, 3}, 2, RicochetForm::WrongSide) > 0.1);

    // The plain-transpose form only survives at s = t = 0.
    CHECK(ricochet_check(0, {0, 0, 2}, 1, RicochetForm::PlainTranspose) < 1e-10);
    CHECK(ricochet_check(0, {0, 0, 3}, 2, RicochetForm::PlainTranspose) < 1e-10);
    CHECK(ricochet_check(0, {0, 1, 2}, 1, RicochetForm::PlainTranspose) > 0.1);
    CHECK(ricochet_check(1, {1, 0, 3}, 1, RicochetForm::PlainTranspose) > 0.1);
}

TEST_CASE("discriminating the four-state qubit example") {
    // rho(Phi+) vs rho(Phi-): same t, needs a Hadamard-type setting.
    const auto phases = discriminate({{0, 0, 2}, {1, 0, 2}}, 2);
    CHECK(phases.setting.hadamard);
    CHECK(phases.success_probability == 1.0);

    // rho(Phi+) vs rho(Psi+): computational setting, and Bob's collapsed
    // support given Alice saw a = 0 is {0, 2} against {1, 3}.
    const auto shifts = discriminate({{0, 0, 2}, {0, 1, 2}}, 2);
    CHECK_FALSE(shifts.setting.hadamard);
    const auto p_phi = outcome_distribution(shifts.setting, {0, 0, 2});
    const auto p_psi = outcome_distribution(shifts.setting, {0, 1, 2});
    const BipartiteShape shape{2, 4};
    for (int b : {0, 2}) {
        CHECK(p_phi[shape.flat(0, b)] > 1e-12);
        CHECK(p_psi[shape.flat(0, b)] < 1e-12);
    }
    for (int b : {1, 3}) {
        CHECK(p_phi[shape.flat(0, b)] < 1e-12);
        CHECK(p_psi[shape.flat(0, b)] > 1e-12);
    }
}

TEST_CASE("all qubit pairs are perfectly distinguishable") {
    std::vector<WeylIndex> all;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) all.push_back({s, t, 2});
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const auto protocol = discriminate({all[i], all[j]}, 2);
            CHECK(protocol.success_probability == 1.0);
        }
}

TEST_CASE("outcome distributions are normalized and settings unitary") {
    for (int d : {2, 3}) {
        const auto protocol = discriminate({{0, 0, d}, {1, 0, d}}, d);
        for (int s = 0; s < d; ++s) {
            const auto p = outcome_distribution(protocol.setting, {s, s, d});
            double total = 0.0;
            for (double x : p) total += x;
            CHECK(std::abs(total - 1.0) < 1e-10);
        }
        const Matrix& va = protocol.setting.alice_transform;
        const Matrix& vb = protocol.setting.bob_transform;
        CHECK((va.adjoint() * va - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((vb.adjoint() * vb - Matrix::Identity(2 * d, 2 * d)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("triples at d = 5 admit a perfect setting") {
    const auto protocol = discriminate({{0, 0, 5}, {1, 2, 5}, {3, 1, 5}}, 5);
    CHECK(protocol.success_probability == 1.0);

    Rng rng(1);
    CHECK(sample_run(protocol, {1, 2, 5}, 500, rng) == 1.0);
}

TEST_CASE("sampled runs succeed every time on perfect protocols") {
    const auto protocol = discriminate({{0, 0, 3}, {2, 1, 3}}, 3);
    Rng rng_a(1), rng_b(2);
    const double rate_a = sample_run(protocol, {2, 1, 3}, 1000, rng_a);
    const double rate_b = sample_run(protocol, {2, 1, 3}, 1000, rng_b);
    CHECK(rate_a == 1.0);
    CHECK(rate_b == 1.0);

    // Degenerate lookup as a negative control: misroute half the outcomes.
    DiscriminationProtocol broken = protocol;
    for (std::size_t o = 0; o < broken.lookup.size(); o += 2)
        if (broken.lookup[o] == 1) broken.lookup[o] = 0;
    Rng rng_c(3);
    CHECK(sample_run(broken, {2, 1, 3}, 1000, rng_c) < 1.0);
}

TEST_CASE("the mirrored conjugation convention also discriminates") {
    Rng rng(11);
    for (int d : {2, 3}) {
        const auto protocol =
            discriminate({{0, 0, d}, {1, 0, d}}, d, ConjugationConvention::AliceConjugated);
        CHECK(protocol.success_probability == 1.0);
        CHECK(sample_run(protocol, {1, 0, d}, 200, rng) == 1.0);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(discriminate({{0, 0, 4}, {1, 0, 4}}, 4), NonPrimeDimension);
    CHECK_THROWS_AS(discriminate({{0, 0, 2}, {0, 0, 2}}, 2), std::invalid_argument);
    const auto protocol = discriminate({{0, 0, 2}, {1, 0, 2}}, 2);
    Rng rng(5);
    CHECK_THROWS_AS(sample_run(protocol, {0, 1, 2}, 10, rng), std::invalid_argument);
}

}  // TEST_SUITE
