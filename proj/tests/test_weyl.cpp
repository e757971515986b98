#include <doctest.h>

#include <cmath>

#include "mmeslab/qmat.hpp"
#include "mmeslab/weyl.hpp"

using namespace mmeslab;

TEST_SUITE("weyl") {

TEST_CASE("qubit shift and clock") {
    const Matrix x = weyl_unitary({0, 1, 2});
    CHECK(std::abs(x(0, 1) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x(1, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x(0, 0)) < 1e-15);

    const Matrix z = weyl_unitary({1, 0, 2});
    CHECK(std::abs(z(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(z(1, 1) - Complex(-1, 0)) < 1e-12);
    CHECK(std::abs(z(0, 1)) < 1e-15);

    CHECK((weyl_unitary({0, 0, 2}) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace orthogonality at d = 3") {
    const int d = 3;
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            for (int s2 = 0; s2 < d; ++s2)
                for (int t2 = 0; t2 < d; ++t2) {
                    const Complex tr =
                        (weyl_unitary({s, t, d}) * weyl_unitary({s2, t2, d}).adjoint()).trace();
                    const double expected = (s == s2 && t == t2) ? d : 0.0;
                    CHECK(std::abs(tr - Complex(expected, 0)) < 1e-10);
                }
}

TEST_CASE("generalized Bell seeds at d = 2") {
    const GeneralizedBellState fam1 = generalized_bell({0, 0, 2}, 1);
    REQUIRE(fam1.state.shape == BipartiteShape{2, 4});
    CHECK(std::abs(fam1.state.amplitudes(0) - 1.0 / std::sqrt(2.0)) < 1e-15);  // |0,0>
    CHECK(std::abs(fam1.state.amplitudes(5) - 1.0 / std::sqrt(2.0)) < 1e-15);  // |1,1>
    CHECK(std::abs(fam1.state.amplitudes(1)) + std::abs(fam1.state.amplitudes(2)) == 0.0);

    const GeneralizedBellState fam2 = generalized_bell({0, 0, 2}, 2);
    CHECK(std::abs(fam2.state.amplitudes(2) - 1.0 / std::sqrt(2.0)) < 1e-15);  // |0,2>
    CHECK(std::abs(fam2.state.amplitudes(7) - 1.0 / std::sqrt(2.0)) < 1e-15);  // |1,3>

    CHECK_THROWS_AS(generalized_bell({0, 0, 2}, 3), std::invalid_argument);
}

TEST_CASE("the 2d^2 states form a complete orthonormal basis") {
    for (int d : {2, 3}) {
        std::vector<Vector> states;
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t)
                for (int family : {1, 2})
                    states.push_back(generalized_bell({s, t, d}, family).state.amplitudes);

        Matrix completeness = Matrix::Zero(2 * d * d, 2 * d * d);
        for (const Vector& v : states) completeness += v * v.adjoint();
        CHECK((completeness - Matrix::Identity(2 * d * d, 2 * d * d)).cwiseAbs().maxCoeff() <
              1e-10);

        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j) {
                const Complex overlap = states[i].dot(states[j]);
                const double expected = i == j ? 1.0 : 0.0;
                CHECK(std::abs(overlap - Complex(expected, 0)) < 1e-10);
            }
    }
}

TEST_CASE("every generalized Bell state is maximally entangled across d : 2d") {
    for (int d : {2, 3}) {
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t)
                for (int family : {1, 2}) {
                    const GeneralizedBellState bell = generalized_bell({s, t, d}, family);
                    const Matrix reduced = partial_trace(density_from_pure(bell.state).matrix,
                                                         bell.state.shape, Subsystem::A);
                    CHECK((reduced - Matrix::Identity(d, d) / d).cwiseAbs().maxCoeff() < 1e-10);

                    const SchmidtResult sd = schmidt_decompose(bell.state);
                    for (int i = 0; i < d; ++i)
                        CHECK(std::abs(sd.coefficients(i) - 1.0 / std::sqrt(double(d))) < 1e-10);
                }
    }
}

TEST_CASE("unitary basis report passes for d = 2 and d = 5") {
    for (int d : {2, 5}) {
        const UnitaryBasisReport report = verify_unitary_basis(d);
        CHECK(report.ok());
        CHECK(report.max_unitarity_deviation < 1e-10);
        CHECK(report.max_orthogonality_deviation < 1e-10);
        CHECK(report.max_expansion_residual < 1e-10);
    }
}

TEST_CASE("tampered basis is flagged") {
    const int d = 2;
    std::vector<Matrix> basis = weyl_basis(d);
    Matrix bogus(2, 2);
    bogus << Complex(0.3, 0.1), Complex(0.2, 0), Complex(0, -0.4), Complex(1.1, 0);
    basis[1] = bogus;  // slot of U_01
    const UnitaryBasisReport report = verify_unitary_basis(basis, d);
    CHECK_FALSE(report.ok());
    CHECK(report.max_orthogonality_deviation > 1e-10);
    bool orthogonality_flagged = false;
    for (const std::string& v : report.violations)
        if (v.find("orthogonality") != std::string::npos) orthogonality_flagged = true;
    CHECK(orthogonality_flagged);
}

}  // TEST_SUITE
