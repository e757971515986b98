#include "mmeslab/channels.hpp"

#include <cmath>

#include "mmeslab/measures.hpp"
#include "mmeslab/qmat.hpp"
#include "mmeslab/teleport.hpp"

namespace mmeslab {

namespace {

Matrix half_swap_permutation() {
    Matrix p = Matrix::Zero(4, 4);
    p(0, 2) = 1;
    p(1, 3) = 1;
    p(3, 1) = 1;
    p(2, 0) = 1;
    return p;
}

int spin_dim(double s) {
    const double n = 2.0 * s + 1.0;
    const int dim = static_cast<int>(std::lround(n));
    if (dim < 1 || std::abs(n - dim) > 1e-12)
        throw std::invalid_argument("spin matrices: 2s+1 must be a positive integer");
    return dim;
}

Matrix spin_plus(double s) {
    const int dim = spin_dim(s);
    Matrix sp = Matrix::Zero(dim, dim);
    for (int i = 1; i < dim; ++i) {
        const double m = s - i;  // S+ raises |m> to |m+1>, i.e. row i-1
        sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    return sp;
}

}  // namespace

Matrix spin_z(double s) {
    const int dim = spin_dim(s);
    Matrix sz = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) sz(i, i) = s - i;
    return sz;
}

Matrix spin_x(double s) {
    const Matrix sp = spin_plus(s);
    return 0.5 * (sp + sp.adjoint());
}

Matrix spin_y(double s) {
    const Matrix sp = spin_plus(s);
    return (sp - sp.adjoint()) / Complex(0, 2);
}

KrausChannel make_channel(std::vector<Matrix> operators) {
    if (operators.empty()) throw std::invalid_argument("make_channel: need at least one operator");
    const auto rows = operators[0].rows();
    const auto cols = operators[0].cols();
    if (rows != cols) throw std::invalid_argument("make_channel: operators must be square");
    for (const Matrix& m : operators)
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("make_channel: operator dimension mismatch");

    Matrix completeness = Matrix::Zero(rows, cols);
    for (const Matrix& m : operators) completeness += m.adjoint() * m;
    const bool tp =
        (completeness - Matrix::Identity(rows, cols)).cwiseAbs().maxCoeff() <= 1e-10;
    return KrausChannel{std::move(operators), tp};
}

KrausChannel swap_noise_channel() {
    const double c = 1.0 / std::sqrt(2.0);
    return make_channel({c * Matrix::Identity(4, 4), c * half_swap_permutation()});
}

KrausChannel swap_noise_channel_literal() {
    return make_channel({0.5 * Matrix::Identity(4, 4), 0.5 * half_swap_permutation()});
}

DensityMatrix apply_one_sided(const KrausChannel& ch, const DensityMatrix& rho, Subsystem side,
                              bool allow_non_trace_preserving) {
    if (!ch.trace_preserving && !allow_non_trace_preserving)
        throw std::invalid_argument(
            "apply_one_sided: channel is not trace preserving (override flag required)");
    const int dim = static_cast<int>(ch.operators[0].rows());
    if (dim != rho.shape.dim(side))
        throw std::invalid_argument("apply_one_sided: channel dimension does not match side");

    Matrix out = Matrix::Zero(rho.shape.total(), rho.shape.total());
    for (const Matrix& m : ch.operators) {
        const Matrix lifted = side == Subsystem::B
                                  ? tensor_product(Matrix::Identity(rho.shape.dim_a, rho.shape.dim_a), m)
                                  : tensor_product(m, Matrix::Identity(rho.shape.dim_b, rho.shape.dim_b));
        out += lifted * rho.matrix * lifted.adjoint();
    }
    return ch.trace_preserving ? make_density_matrix(rho.shape, std::move(out))
                               : density_unchecked(rho.shape, std::move(out));
}

EvolutionReport evolution_report(const KrausChannel& ch, const DensityMatrix& rho,
                                 Subsystem side) {
    EvolutionReport report;
    const DensityMatrix after = apply_one_sided(ch, rho, side);

    report.negativity_before = negativity(rho);
    report.negativity_after = negativity(after);
    report.mmes_before = is_mmes(rho, rho.shape.small_side());
    report.mmes_after = is_mmes(after, after.shape.small_side());

    DensityMatrix resource = after;
    if (resource.shape.dim_b == 2 * resource.shape.dim_a)
        resource = density_unchecked(resource.shape.swapped(),
                                     swap_subsystems(resource.matrix, resource.shape));
    if (resource.shape.dim_a == 2 * resource.shape.dim_b && resource.shape.dim_b >= 2) {
        Rng rng(7);
        double worst = 1.0;
        for (int i = 0; i < 2; ++i) {
            const Vector psi = haar_random_ket(resource.shape.dim_b, rng);
            for (const TeleportOutcome& out : simulate_teleport_with_resource(resource, psi))
                worst = std::min(worst, out.fidelity_after_correction);
        }
        report.min_corrected_fidelity = worst;
    }
    return report;
}

XxzGroundState xxz_ground_state(const XxzParams& params) {
    const Matrix sx1 = spin_x(params.spin_a), sy1 = spin_y(params.spin_a),
                 sz1 = spin_z(params.spin_a);
    const Matrix sx2 = spin_x(params.spin_b), sy2 = spin_y(params.spin_b),
                 sz2 = spin_z(params.spin_b);

    const Matrix h = params.j * (tensor_product(sx1, sx2) + tensor_product(sy1, sy2)) +
                     params.delta * tensor_product(sz1, sz2);
    const EigResult eig = hermitian_eig(h);

    const int n = static_cast<int>(eig.values.size());
    const double ground = eig.values(n - 1);  // eigenvalues come back descending

    XxzGroundState out;
    out.energy = ground;
    out.regime_flagged = !params.standard_regime();
    const BipartiteShape shape{static_cast<int>(sx1.rows()), static_cast<int>(sx2.rows())};
    for (int i = n - 1; i >= 0 && eig.values(i) - ground <= 1e-9; --i) {
        out.states.push_back(make_pure_state(shape, eig.vectors.col(i)));
        ++out.degeneracy;
    }
    out.eof_of_first = eof_pure(out.states.front());
    return out;
}

}  // namespace mmeslab
