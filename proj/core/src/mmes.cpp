#include "mmeslab/mmes.hpp"

#include <cmath>
#include <limits>

#include "mmeslab/measures.hpp"
#include "mmeslab/qmat.hpp"

namespace mmeslab {

namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kDegenerateGap = 1e-9;

// Reshape a (d, dp) pure vector into its d x dp coefficient map; then
// Tr_B |v><w| = map(v) map(w)^dagger.
Matrix to_map(const Vector& v, const BipartiteShape& shape) {
    Matrix m(shape.dim_a, shape.dim_b);
    for (int a = 0; a < shape.dim_a; ++a)
        for (int b = 0; b < shape.dim_b; ++b) m(a, b) = v(shape.flat(a, b));
    return m;
}

// Within one degenerate eigenspace the certificate conditions only constrain
// the span, so pick the basis that jointly block-diagonalizes the B-side
// overlap forms G^{(a,a')}_{kl} = (M_k M_l^dagger)(a, a'). Classic refinement:
// split the space by the spectrum of one Hermitian form after another.
void canonicalize_block(std::vector<Matrix>& maps, int lo, int len) {
    const int d = static_cast<int>(maps[0].rows());
    std::vector<Matrix> forms;
    for (int a = 0; a < d; ++a)
        for (int a2 = a; a2 < d; ++a2) {
            Matrix g(len, len);
            for (int k = 0; k < len; ++k)
                for (int l = 0; l < len; ++l)
                    g(k, l) = (maps[lo + k] * maps[lo + l].adjoint())(a, a2);
            if (a == a2) {
                forms.push_back(0.5 * (g + g.adjoint()));
            } else {
                forms.push_back(0.5 * (g + g.adjoint()));
                forms.push_back((g - g.adjoint()) / Complex(0, 2));
            }
        }

    Matrix w = Matrix::Identity(len, len);
    std::vector<std::pair<int, int>> blocks{{0, len}};
    for (const Matrix& f : forms) {
        const Matrix frot = w.adjoint() * f * w;
        std::vector<std::pair<int, int>> next;
        for (const auto& [blo, blen] : blocks) {
            if (blen == 1) {
                next.emplace_back(blo, blen);
                continue;
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es(frot.block(blo, blo, blen, blen));
            w.middleCols(blo, blen) = w.middleCols(blo, blen) * es.eigenvectors();
            int start = 0;
            for (int i = 1; i < blen; ++i) {
                if (es.eigenvalues()(i) - es.eigenvalues()(start) > 1e-8) {
                    next.emplace_back(blo + start, i - start);
                    start = i;
                }
            }
            next.emplace_back(blo + start, blen - start);
        }
        blocks = std::move(next);
    }

    std::vector<Matrix> rotated(len, Matrix::Zero(maps[0].rows(), maps[0].cols()));
    for (int k = 0; k < len; ++k)
        for (int l = 0; l < len; ++l) rotated[k] += w(l, k) * maps[lo + l];
    for (int k = 0; k < len; ++k) maps[lo + k] = std::move(rotated[k]);
}

}  // namespace

DensityMatrix construct_mmes(const MmesSpec& spec) {
    const int d = spec.d;
    const int k = static_cast<int>(spec.b_blocks.size());
    if (d < 1) throw std::invalid_argument("construct_mmes: d must be positive");
    if (k == 0 || spec.weights.size() != spec.b_blocks.size())
        throw std::invalid_argument("construct_mmes: weights and blocks must match and be nonempty");
    const int dp = static_cast<int>(spec.b_blocks[0].rows());
    if (dp < k * d) throw std::invalid_argument("construct_mmes: dimension shortfall, d' < k d");

    double total = 0.0;
    for (double p : spec.weights) {
        if (p <= 0.0) throw std::invalid_argument("construct_mmes: weights must be positive");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("construct_mmes: weights must sum to 1");

    for (int m = 0; m < k; ++m) {
        const Matrix& bm = spec.b_blocks[m];
        if (bm.rows() != dp || bm.cols() != d)
            throw std::invalid_argument("construct_mmes: block must be d' x d");
        for (int n = 0; n <= m; ++n) {
            const Matrix overlap = spec.b_blocks[n].adjoint() * bm;
            const Matrix expected =
                (n == m) ? Matrix(Matrix::Identity(d, d)) : Matrix(Matrix::Zero(d, d));
            if ((overlap - expected).cwiseAbs().maxCoeff() > 1e-10)
                throw std::invalid_argument(n == m
                                                ? "construct_mmes: block columns not orthonormal"
                                                : "construct_mmes: cross-block overlap above 1e-10");
        }
    }

    const BipartiteShape shape{d, dp};
    Matrix rho = Matrix::Zero(shape.total(), shape.total());
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < k; ++m) {
        Vector psi = Vector::Zero(shape.total());
        for (int i = 0; i < d; ++i)
            for (int b = 0; b < dp; ++b)
                psi(shape.flat(i, b)) = spec.b_blocks[m](b, i) * inv_sqrt_d;
        rho += spec.weights[m] * (psi * psi.adjoint());
    }
    return make_density_matrix(shape, std::move(rho));
}

MmesSpec random_mmes_spec(int d, int k, int d_prime, Rng& rng) {
    if (d_prime < k * d) throw std::invalid_argument("random_mmes_spec: d' must be at least k d");
    const Matrix u = haar_random_unitary(d_prime, rng);
    MmesSpec spec;
    spec.d = d;
    std::uniform_real_distribution<double> weight(0.2, 1.0);
    double total = 0.0;
    for (int m = 0; m < k; ++m) {
        spec.b_blocks.push_back(u.middleCols(m * d, d));
        spec.weights.push_back(weight(rng));
        total += spec.weights.back();
    }
    for (double& p : spec.weights) p /= total;
    return spec;
}

MmesCertificate is_mmes(const DensityMatrix& rho, Subsystem small_side, double tol) {
    Matrix sigma;
    BipartiteShape shape;
    if (small_side == Subsystem::A) {
        sigma = rho.matrix;
        shape = rho.shape;
    } else {
        sigma = swap_subsystems(rho.matrix, rho.shape);
        shape = rho.shape.swapped();
    }
    const int d = shape.dim_a;

    const EigResult eig = hermitian_eig(sigma);
    int rank = 0;
    while (rank < eig.values.size() && eig.values(rank) > kRankCutoff) ++rank;

    std::vector<Matrix> maps;
    maps.reserve(rank);
    for (int m = 0; m < rank; ++m) maps.push_back(to_map(eig.vectors.col(m), shape));

    // Degenerate clusters share the certificate basis freedom.
    for (int lo = 0; lo < rank;) {
        int hi = lo + 1;
        while (hi < rank && eig.values(hi - 1) - eig.values(hi) <= kDegenerateGap) ++hi;
        if (hi - lo > 1) canonicalize_block(maps, lo, hi - lo);
        lo = hi;
    }

    MmesCertificate cert;
    cert.rank = rank;
    cert.small_side = small_side;
    cert.tolerance = tol;
    cert.rank_cutoff = kRankCutoff;
    cert.eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());

    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < rank; ++m) {
        Eigen::JacobiSVD<Matrix> svd(maps[m]);
        for (int i = 0; i < d; ++i) {
            const double coeff = i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
            cert.worst_schmidt_deviation =
                std::max(cert.worst_schmidt_deviation, std::abs(coeff - target));
        }
        for (int n = 0; n < m; ++n)
            cert.worst_cross_trace_norm =
                std::max(cert.worst_cross_trace_norm, (maps[m] * maps[n].adjoint()).norm());
    }

    const Matrix reduced = partial_trace(sigma, shape, Subsystem::A);
    cert.reduced_small_side_deviation =
        (reduced - Matrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();

    cert.verdict = cert.worst_schmidt_deviation <= tol && cert.worst_cross_trace_norm <= tol &&
                   cert.reduced_small_side_deviation <= tol;
    return cert;
}

DecompositionAudit decomposition_audit(const DensityMatrix& rho, Subsystem /*small_side*/,
                                       int trials, Rng& rng) {
    const EigResult eig = hermitian_eig(rho.matrix);
    int rank = 0;
    while (rank < eig.values.size() && eig.values(rank) > kRankCutoff) ++rank;
    if (rank == 0) throw std::invalid_argument("decomposition_audit: zero operator");

    DecompositionAudit audit;
    audit.trials = trials;
    audit.min_eof = std::numeric_limits<double>::infinity();
    audit.max_eof = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        const int l = rank + (trial % 2);  // exercise decompositions longer than the rank
        const Matrix u = haar_random_unitary(l, rng);
        for (int n = 0; n < l; ++n) {
            Vector w = Vector::Zero(rho.shape.total());
            for (int m = 0; m < rank; ++m)
                w += u(n, m) * std::sqrt(eig.values(m)) * eig.vectors.col(m);
            const double q = w.squaredNorm();
            if (q < 1e-12) continue;
            const double e = eof_pure(make_pure_state(rho.shape, w / std::sqrt(q)));
            audit.min_eof = std::min(audit.min_eof, e);
            audit.max_eof = std::max(audit.max_eof, e);
            ++audit.elements_checked;
        }
    }
    return audit;
}

}  // namespace mmeslab
