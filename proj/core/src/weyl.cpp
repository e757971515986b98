#include "mmeslab/weyl.hpp"

#include <cmath>
#include <numbers>

#include "mmeslab/qmat.hpp"

namespace mmeslab {

namespace {

void check_index(const WeylIndex& idx) {
    if (idx.d < 1) throw std::invalid_argument("weyl: d must be positive");
    if (idx.s < 0 || idx.s >= idx.d || idx.t < 0 || idx.t >= idx.d)
        throw std::invalid_argument("weyl: (s, t) must lie in [0, d)");
}

}  // namespace

Matrix weyl_unitary(const WeylIndex& idx) {
    check_index(idx);
    const int d = idx.d;
    Matrix u = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        // g^s contributes omega^{s k}, h^t moves |k> to |(k+t) mod d>.
        const double phase = -2.0 * std::numbers::pi * idx.s * k / d;
        u((k + idx.t) % d, k) = std::polar(1.0, phase);
    }
    return u;
}

GeneralizedBellState generalized_bell(const WeylIndex& idx, int family) {
    check_index(idx);
    if (family != 1 && family != 2)
        throw std::invalid_argument("generalized_bell: family must be 1 or 2");
    const int d = idx.d;
    const Matrix u = weyl_unitary(idx);
    const BipartiteShape shape{d, 2 * d};
    Vector amp = Vector::Zero(shape.total());
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    const int offset = (family - 1) * d;
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a) amp(shape.flat(a, offset + i)) = u(a, i) * inv_sqrt_d;
    return GeneralizedBellState{idx, family, make_pure_state(shape, std::move(amp))};
}

std::vector<Matrix> weyl_basis(int d) {
    std::vector<Matrix> basis;
    basis.reserve(d * d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) basis.push_back(weyl_unitary({s, t, d}));
    return basis;
}

UnitaryBasisReport verify_unitary_basis(const std::vector<Matrix>& basis, int d,
                                        std::uint64_t seed) {
    UnitaryBasisReport report;
    if (d < 2) throw std::invalid_argument("verify_unitary_basis: d must be at least 2");
    if (basis.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("verify_unitary_basis: expected d^2 operators");

    const Matrix id = Matrix::Identity(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double dev = (basis[i].adjoint() * basis[i] - id).cwiseAbs().maxCoeff();
        report.max_unitarity_deviation = std::max(report.max_unitarity_deviation, dev);
        if (dev > 1e-10)
            report.violations.push_back("unitarity violated at basis element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Complex tr = (basis[i] * basis[j].adjoint()).trace();
            const double expected = (i == j) ? static_cast<double>(d) : 0.0;
            const double dev = std::abs(tr - Complex(expected, 0.0));
            report.max_orthogonality_deviation = std::max(report.max_orthogonality_deviation, dev);
            if (dev > 1e-10)
                report.violations.push_back("trace orthogonality violated at pair (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
        }

    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix w(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) w(i, j) = Complex(gauss(rng), gauss(rng));
        Matrix rec = Matrix::Zero(d, d);
        for (const Matrix& u : basis) rec += (u.adjoint() * w).trace() * u;
        rec /= static_cast<double>(d);
        const double dev = (rec - w).cwiseAbs().maxCoeff();
        report.max_expansion_residual = std::max(report.max_expansion_residual, dev);
        if (dev > 1e-10)
            report.violations.push_back("expansion completeness violated on trial " +
                                        std::to_string(trial));
    }
    return report;
}

UnitaryBasisReport verify_unitary_basis(int d, std::uint64_t seed) {
    return verify_unitary_basis(weyl_basis(d), d, seed);
}

}  // namespace mmeslab
