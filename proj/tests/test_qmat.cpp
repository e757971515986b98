#include <doctest.h>

#include <cmath>

#include "mmeslab/qmat.hpp"
#include "support/oracles.hpp"
#include "support/states.hpp"

using namespace mmeslab;

namespace {

Matrix pauli_x() {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = 1;
    x(1, 0) = 1;
    return x;
}

PureState bell_2x2() {
    Vector amp = Vector::Zero(4);
    amp(0) = amp(3) = 1.0 / std::sqrt(2.0);
    return make_pure_state({2, 2}, amp);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("qmat") {

TEST_CASE("tensor product basis bookkeeping") {
    const Matrix ket0 = basis_ket(2, 0);
    const Matrix ket1 = basis_ket(2, 1);
    const Matrix prod = tensor_product(ket0, ket1);
    REQUIRE(prod.rows() == 4);
    CHECK(std::abs(prod(1, 0) - Complex(1, 0)) == 0.0);
    CHECK(prod.cwiseAbs().sum() == 1.0);

    CHECK(max_abs(tensor_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) -
                  Matrix::Identity(4, 4)) == 0.0);

    const Matrix shifted = tensor_product(pauli_x(), Matrix::Identity(2, 2)) *
                           tensor_product(ket0, ket0);
    CHECK(std::abs(shifted(2, 0) - Complex(1, 0)) == 0.0);  // |10> lives at flat index 2
}

TEST_CASE("tensor product is associative and multiplicative on traces") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim(2, 4);
        const Matrix a = haar_random_unitary(dim(rng), rng);
        const Matrix b = haar_random_unitary(dim(rng), rng);
        const Matrix c = haar_random_unitary(dim(rng), rng);
        CHECK(max_abs(tensor_product(tensor_product(a, b), c) -
                      tensor_product(a, tensor_product(b, c))) < 1e-12);
        CHECK(std::abs(tensor_product(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
    const DensityMatrix rho = density_from_pure(bell_2x2());
    const Matrix reduced = partial_trace(rho, Subsystem::A);
    CHECK(max_abs(reduced - 0.5 * Matrix::Identity(2, 2)) < 1e-12);
    CHECK(max_abs(partial_trace(rho, Subsystem::B) - 0.5 * Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("partial trace of a product operator factorizes") {
    Rng rng(5);
    const Vector sigma_ket = haar_random_ket(3, rng);
    Matrix sigma = sigma_ket * sigma_ket.adjoint();
    sigma *= 0.7;  // non-unit trace on purpose
    const Matrix proj0 = basis_ket(2, 0) * basis_ket(2, 0).adjoint();
    const Matrix joint = tensor_product(proj0, sigma);
    const Matrix reduced = partial_trace(joint, {2, 3}, Subsystem::A);
    CHECK(max_abs(reduced - sigma.trace() * proj0) < 1e-12);
}

TEST_CASE("cross partial trace of the 2x4 example pair vanishes") {
    const Vector v1 = fixtures::psi_one().amplitudes;
    const Vector v2 = fixtures::psi_two().amplitudes;
    const Matrix cross = partial_trace(Matrix(v1 * v2.adjoint()), {2, 4}, Subsystem::A);
    CHECK(max_abs(cross) == 0.0);  // disjoint B-side supports, exact zero
}

TEST_CASE("partial traces of random density matrices keep unit trace") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = fixtures::random_density({3, 4}, 3, rng);
        CHECK(std::abs(partial_trace(rho, Subsystem::A).trace().real() - 1.0) < 1e-10);
        CHECK(std::abs(partial_trace(rho, Subsystem::B).trace().real() - 1.0) < 1e-10);
    }
}

TEST_CASE("partial transpose: product states, Bell spectrum, involution") {
    const Matrix proj00 = tensor_product(basis_ket(2, 0) * basis_ket(2, 0).adjoint(),
                                         basis_ket(2, 0) * basis_ket(2, 0).adjoint());
    CHECK(max_abs(partial_transpose(proj00, {2, 2}, Subsystem::A) - proj00) == 0.0);

    const DensityMatrix bell = density_from_pure(bell_2x2());
    const Matrix pt = partial_transpose(bell, Subsystem::A);
    const auto spectrum = oracle::jacobi_eigenvalues(pt);
    REQUIRE(spectrum.size() == 4);
    CHECK(spectrum[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectrum[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectrum[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectrum[3] == doctest::Approx(-0.5).epsilon(1e-12));

    // diagonal separable mixture keeps its spectrum
    Matrix diag = Matrix::Zero(4, 4);
    diag(0, 0) = 0.4;
    diag(1, 1) = 0.3;
    diag(2, 2) = 0.2;
    diag(3, 3) = 0.1;
    CHECK(max_abs(partial_transpose(diag, {2, 2}, Subsystem::B) - diag) == 0.0);

    // involution is exact, a pure entry permutation
    Rng rng(3);
    const DensityMatrix rho = fixtures::random_density({2, 3}, 4, rng);
    const Matrix twice = partial_transpose(partial_transpose(rho, Subsystem::B), rho.shape,
                                           Subsystem::B);
    CHECK(max_abs(twice - rho.matrix) == 0.0);
}

TEST_CASE("trace norm") {
    Rng rng(17);
    const DensityMatrix rho = fixtures::random_density({2, 2}, 2, rng);
    CHECK(trace_norm(rho.matrix) == doctest::Approx(1.0).epsilon(1e-10));

    const Matrix pt = partial_transpose(density_from_pure(bell_2x2()), Subsystem::A);
    CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-10));

    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 1;
    diag(1, 1) = -2;
    CHECK(trace_norm(diag) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(trace_norm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian eigendecomposition contract") {
    Matrix diag = Matrix::Zero(3, 3);
    diag(0, 0) = 3;
    diag(1, 1) = 1;
    diag(2, 2) = 2;
    const EigResult sorted = hermitian_eig(diag);
    CHECK(sorted.values(0) == doctest::Approx(3.0));
    CHECK(sorted.values(1) == doctest::Approx(2.0));
    CHECK(sorted.values(2) == doctest::Approx(1.0));

    const EigResult flip = hermitian_eig(pauli_x());
    CHECK(flip.values(0) == doctest::Approx(1.0));
    CHECK(flip.values(1) == doctest::Approx(-1.0));

    Rng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix g(8, 8);
        std::normal_distribution<double> gauss;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
        const Matrix h = 0.5 * (g + g.adjoint());
        const EigResult eig = hermitian_eig(h);
        const Matrix rec =
            eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
            eig.vectors.adjoint();
        CHECK(max_abs(rec - h) < 1e-10);
        CHECK(max_abs(eig.vectors.adjoint() * eig.vectors - Matrix::Identity(8, 8)) < 1e-10);
        CHECK(std::abs(eig.values.sum() - h.trace().real()) < 1e-10);

        // agree with the independent Jacobi oracle
        const auto reference = oracle::jacobi_eigenvalues(h);
        for (int i = 0; i < 8; ++i) CHECK(std::abs(eig.values(i) - reference[i]) < 1e-10);
    }

    Matrix skew = Matrix::Zero(2, 2);
    skew(0, 1) = 1;
    CHECK_THROWS_AS(hermitian_eig(skew), std::invalid_argument);
}

TEST_CASE("schmidt decomposition") {
    const SchmidtResult bell = schmidt_decompose(bell_2x2());
    CHECK(bell.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bell.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    Vector product = Vector::Zero(4);
    product(1) = 1.0;  // |01>
    const SchmidtResult rank1 = schmidt_decompose(make_pure_state({2, 2}, product));
    CHECK(rank1.coefficients(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rank1.coefficients(1) == doctest::Approx(0.0).epsilon(1e-12));

    Vector skewed = Vector::Zero(4);
    skewed(0) = std::sqrt(1.0 / 3.0);
    skewed(3) = std::sqrt(2.0 / 3.0);
    const SchmidtResult two = schmidt_decompose(make_pure_state({2, 2}, skewed));
    CHECK(two.coefficients(0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(two.coefficients(1) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("schmidt reconstruction and local-unitary invariance") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const BipartiteShape shape{3, 5};
        const PureState psi = make_pure_state(shape, haar_random_ket(shape.total(), rng));
        const SchmidtResult sd = schmidt_decompose(psi);

        CHECK(std::abs(sd.coefficients.squaredNorm() - 1.0) < 1e-10);
        Vector rebuilt = Vector::Zero(shape.total());
        for (int i = 0; i < sd.coefficients.size(); ++i)
            rebuilt += sd.coefficients(i) *
                       tensor_product(Matrix(sd.a_basis.col(i)), Matrix(sd.b_basis.col(i)));
        CHECK((rebuilt - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-10);

        const Matrix ua = haar_random_unitary(3, rng);
        const Matrix ub = haar_random_unitary(5, rng);
        const Vector rotated = tensor_product(ua, ub) * psi.amplitudes;
        const SchmidtResult sd2 = schmidt_decompose(make_pure_state(shape, rotated));
        for (int i = 0; i < sd.coefficients.size(); ++i)
            CHECK(std::abs(sd.coefficients(i) - sd2.coefficients(i)) < 1e-8);
    }
}

TEST_CASE("haar unitaries: determinism, unitarity, phase-only at dim 1") {
    Rng rng_a(42), rng_b(42);
    const Matrix u1 = haar_random_unitary(4, rng_a);
    const Matrix u2 = haar_random_unitary(4, rng_b);
    CHECK(max_abs(u1 - u2) == 0.0);

    Rng rng(1);
    const Matrix scalar = haar_random_unitary(1, rng);
    CHECK(std::abs(std::abs(scalar(0, 0)) - 1.0) < 1e-12);

    const Matrix u8 = haar_random_unitary(8, rng);
    CHECK(max_abs(u8.adjoint() * u8 - Matrix::Identity(8, 8)) < 1e-10);
}

TEST_CASE("pure-state fidelity") {
    const PureState bell = bell_2x2();
    CHECK(fidelity_pure(bell, bell) == doctest::Approx(1.0).epsilon(1e-14));

    const PureState zero = make_pure_state({1, 2}, basis_ket(2, 0));
    const PureState one = make_pure_state({1, 2}, basis_ket(2, 1));
    CHECK(fidelity_pure(zero, one) == doctest::Approx(0.0).epsilon(1e-14));

    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(fidelity_pure(plus, Vector(basis_ket(2, 0))) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(fidelity_pure(Vector(basis_ket(2, 0)), Vector(basis_ket(3, 0))),
                    std::invalid_argument);
}

TEST_CASE("state validation guards") {
    Vector unnormalized = Vector::Ones(4);
    CHECK_THROWS_AS(make_pure_state({2, 2}, unnormalized), std::invalid_argument);

    Matrix not_hermitian = Matrix::Identity(4, 4) * 0.25;
    not_hermitian(0, 1) = Complex(0, 0.5);
    CHECK_THROWS_AS(make_density_matrix({2, 2}, not_hermitian), std::invalid_argument);

    Matrix wrong_trace = Matrix::Identity(4, 4);
    CHECK_THROWS_AS(make_density_matrix({2, 2}, wrong_trace), std::invalid_argument);

    Matrix indefinite = Matrix::Zero(4, 4);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(make_density_matrix({2, 2}, indefinite), std::invalid_argument);
}

}  // TEST_SUITE
