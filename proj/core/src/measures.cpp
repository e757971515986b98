#include "mmeslab/measures.hpp"

#include <cmath>

#include "mmeslab/qmat.hpp"

namespace mmeslab {

namespace {

Vector seed_vector(const Matrix& u) {
    // v[(a,b)] = U(b,a); the unnormalized (I (x) U) image of sum_i |i,i>.
    const int d = static_cast<int>(u.rows());
    Vector v(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) v(a * d + b) = u(b, a);
    return v;
}

Matrix polar_unitary(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

struct AscentRun {
    double value;
    Matrix optimizer;
    bool converged;
};

AscentRun ascend(const DensityMatrix& rho, Matrix u, const FefOptions& opts) {
    const int d = rho.shape.dim_a;
    double f = fef_objective(rho, u);
    bool converged = false;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const Vector w = rho.matrix * seed_vector(u);
        Matrix m(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) m(b, a) = w(a * d + b);
        u = polar_unitary(m);
        const double fnew = fef_objective(rho, u);
        if (std::abs(fnew - f) < opts.tol) {
            f = fnew;
            converged = true;
            break;
        }
        f = fnew;
    }
    return {f, std::move(u), converged};
}

}  // namespace

double von_neumann_entropy(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("entropy: input must be square");
    if (std::abs(m.trace().real() - 1.0) > 1e-8 || std::abs(m.trace().imag()) > 1e-8)
        throw std::invalid_argument("entropy: input must have unit trace");
    const EigResult eig = hermitian_eig(m);
    double h = 0.0;
    for (int i = 0; i < eig.values.size(); ++i) {
        const double lambda = eig.values(i);
        if (lambda < -1e-8) throw std::domain_error("entropy: negative eigenvalue below tolerance");
        if (lambda > 0.0) h -= lambda * std::log2(lambda);
    }
    return h;
}

double eof_pure(const PureState& psi) {
    const Matrix rho_a = partial_trace(density_from_pure(psi).matrix, psi.shape, Subsystem::A);
    return von_neumann_entropy(rho_a);
}

double negativity(const DensityMatrix& rho) {
    return 0.5 * (trace_norm(partial_transpose(rho, Subsystem::A)) - 1.0);
}

double fef_objective(const DensityMatrix& rho, const Matrix& u) {
    if (rho.shape.dim_a != rho.shape.dim_b)
        throw std::invalid_argument("fully_entangled_fraction: shape must be square");
    const int d = rho.shape.dim_a;
    if (u.rows() != d || u.cols() != d)
        throw std::invalid_argument("fef_objective: unitary size mismatch");
    const Vector v = seed_vector(u);
    return (v.dot(rho.matrix * v)).real() / d;
}

FefResult fully_entangled_fraction(const DensityMatrix& rho, const FefOptions& opts, Rng& rng) {
    if (rho.shape.dim_a != rho.shape.dim_b)
        throw std::invalid_argument("fully_entangled_fraction: shape must be square");
    const int d = rho.shape.dim_a;

    AscentRun best = ascend(rho, Matrix::Identity(d, d), opts);
    int runs = 1;
    for (int r = 0; r < opts.restarts; ++r) {
        AscentRun run = ascend(rho, haar_random_unitary(d, rng), opts);
        ++runs;
        if (run.value > best.value) best = std::move(run);
    }
    return FefResult{best.value, best.optimizer, runs, best.converged};
}

FefResult fully_entangled_fraction(const DensityMatrix& rho, Rng& rng) {
    return fully_entangled_fraction(rho, FefOptions{}, rng);
}

double optimal_teleport_fidelity(double fef, int d) {
    if (d < 1) throw std::invalid_argument("optimal_teleport_fidelity: d must be positive");
    if (fef < 0.0 || fef > 1.0)
        throw std::invalid_argument("optimal_teleport_fidelity: fef must lie in [0, 1]");
    return (d * fef + 1.0) / (d + 1.0);
}

}  // namespace mmeslab
