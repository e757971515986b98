#include "mmeslab/qmat.hpp"

#include <cmath>

namespace mmeslab {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

PureState make_pure_state(BipartiteShape shape, Vector amplitudes) {
    require(shape.dim_a >= 1 && shape.dim_b >= 1, "pure state: dimensions must be positive");
    require(amplitudes.size() == shape.total(), "pure state: amplitude length does not match shape");
    require(amplitudes.allFinite(), "pure state: amplitudes must be finite");
    require(std::abs(amplitudes.norm() - 1.0) <= kNormTolerance, "pure state: norm must be 1");
    return PureState{shape, std::move(amplitudes)};
}

DensityMatrix make_density_matrix(BipartiteShape shape, Matrix m) {
    require(shape.dim_a >= 1 && shape.dim_b >= 1, "density matrix: dimensions must be positive");
    const int n = shape.total();
    require(m.rows() == n && m.cols() == n, "density matrix: side does not match shape");
    require(m.allFinite(), "density matrix: entries must be finite");
    require(max_abs(m - m.adjoint()) <= kHermitianTolerance, "density matrix: must be Hermitian");
    require(std::abs(m.trace().real() - 1.0) <= kTraceTolerance &&
                std::abs(m.trace().imag()) <= kTraceTolerance,
            "density matrix: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= kPsdTolerance,
            "density matrix: must be positive semidefinite");
    return DensityMatrix{shape, std::move(m)};
}

DensityMatrix density_unchecked(BipartiteShape shape, Matrix m) {
    return DensityMatrix{shape, std::move(m)};
}

DensityMatrix density_from_pure(const PureState& psi) {
    return DensityMatrix{psi.shape, psi.amplitudes * psi.amplitudes.adjoint()};
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, BipartiteShape shape, Subsystem keep) {
    const int da = shape.dim_a, db = shape.dim_b;
    require(m.rows() == shape.total() && m.cols() == shape.total(),
            "partial_trace: operator does not match shape");
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(da, da);
        for (int a = 0; a < da; ++a)
            for (int a2 = 0; a2 < da; ++a2)
                for (int b = 0; b < db; ++b)
                    out(a, a2) += m(shape.flat(a, b), shape.flat(a2, b));
        return out;
    }
    Matrix out = Matrix::Zero(db, db);
    for (int b = 0; b < db; ++b)
        for (int b2 = 0; b2 < db; ++b2)
            for (int a = 0; a < da; ++a)
                out(b, b2) += m(shape.flat(a, b), shape.flat(a, b2));
    return out;
}

Matrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    return partial_trace(rho.matrix, rho.shape, keep);
}

Matrix partial_transpose(const Matrix& m, BipartiteShape shape, Subsystem side) {
    const int da = shape.dim_a, db = shape.dim_b;
    require(m.rows() == shape.total() && m.cols() == shape.total(),
            "partial_transpose: operator does not match shape");
    Matrix out(m.rows(), m.cols());
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int a2 = 0; a2 < da; ++a2)
                for (int b2 = 0; b2 < db; ++b2) {
                    if (side == Subsystem::A)
                        out(shape.flat(a, b), shape.flat(a2, b2)) =
                            m(shape.flat(a2, b), shape.flat(a, b2));
                    else
                        out(shape.flat(a, b), shape.flat(a2, b2)) =
                            m(shape.flat(a, b2), shape.flat(a2, b));
                }
    return out;
}

Matrix partial_transpose(const DensityMatrix& rho, Subsystem side) {
    return partial_transpose(rho.matrix, rho.shape, side);
}

Matrix swap_subsystems(const Matrix& m, BipartiteShape shape) {
    require(m.rows() == shape.total() && m.cols() == shape.total(),
            "swap_subsystems: operator does not match shape");
    const BipartiteShape sw = shape.swapped();
    Matrix out(m.rows(), m.cols());
    for (int a = 0; a < shape.dim_a; ++a)
        for (int b = 0; b < shape.dim_b; ++b)
            for (int a2 = 0; a2 < shape.dim_a; ++a2)
                for (int b2 = 0; b2 < shape.dim_b; ++b2)
                    out(sw.flat(b, a), sw.flat(b2, a2)) = m(shape.flat(a, b), shape.flat(a2, b2));
    return out;
}

double trace_norm(const Matrix& m) {
    require(m.rows() == m.cols(), "trace_norm: input must be square");
    return hermitian_eig(m).values.cwiseAbs().sum();
}

EigResult hermitian_eig(const Matrix& m) {
    require(m.rows() == m.cols(), "hermitian_eig: input must be square");
    require(max_abs(m - m.adjoint()) <= 1e-8, "hermitian_eig: input must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
    const int n = static_cast<int>(m.rows());
    EigResult out;
    out.values = es.eigenvalues().reverse();
    out.vectors = Matrix(n, n);
    for (int i = 0; i < n; ++i) out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
    return out;
}

SchmidtResult schmidt_decompose(const PureState& psi) {
    const int da = psi.shape.dim_a, db = psi.shape.dim_b;
    Matrix m(da, db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b) m(a, b) = psi.amplitudes(psi.shape.flat(a, b));
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtResult out;
    out.coefficients = svd.singularValues();
    out.a_basis = svd.matrixU();
    // m = U S V^dagger, so psi = sum s_i u_i (x) conj(v_i).
    out.b_basis = svd.matrixV().conjugate();
    return out;
}

Matrix haar_random_unitary(int dim, Rng& rng) {
    require(dim >= 1, "haar_random_unitary: dimension must be positive");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= (mag > 0) ? rii / mag : Complex(1, 0);
    }
    return q;
}

Vector haar_random_ket(int dim, Rng& rng) {
    require(dim >= 1, "haar_random_ket: dimension must be positive");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    v.normalize();
    return v;
}

double fidelity_pure(const Vector& psi, const Vector& phi) {
    require(psi.size() == phi.size(), "fidelity_pure: dimension mismatch");
    return std::norm(psi.dot(phi));
}

double fidelity_pure(const PureState& psi, const PureState& phi) {
    return fidelity_pure(psi.amplitudes, phi.amplitudes);
}

Vector basis_ket(int dim, int i) {
    require(i >= 0 && i < dim, "basis_ket: index out of range");
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}

}  // namespace mmeslab
