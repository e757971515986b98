#include "mmeslab/teleport.hpp"

#include <cmath>

#include "mmeslab/qmat.hpp"
#include "mmeslab/weyl.hpp"

namespace mmeslab {

namespace {

constexpr double kZeroProbability = 1e-12;

void check_input_ket(const Vector& psi) {
    if (std::abs(psi.norm() - 1.0) > kNormTolerance)
        throw std::invalid_argument("teleport: input state must be normalized");
}

// Bob's unnormalized conditional operator after Alice projects her pair onto
// |phi>: sigma(b,b') = sum_{m,m'} gamma(m) conj(gamma(m')) chi[(m,b),(m',b')]
// with gamma(m) = sum_k conj(phi[(k,m)]) psi(k).
Matrix conditional_state(const Vector& phi, const Vector& psi, const Matrix& chi,
                         const BipartiteShape& chi_shape, const BipartiteShape& alice_shape) {
    const int d_in = static_cast<int>(psi.size());
    const int dim_alice2 = alice_shape.dim_b;
    Vector gamma = Vector::Zero(dim_alice2);
    for (int m = 0; m < dim_alice2; ++m)
        for (int k = 0; k < d_in; ++k)
            gamma(m) += std::conj(phi(alice_shape.flat(k, m))) * psi(k);

    const int d_bob = chi_shape.dim_b;
    Matrix sigma = Matrix::Zero(d_bob, d_bob);
    for (int b = 0; b < d_bob; ++b)
        for (int b2 = 0; b2 < d_bob; ++b2)
            for (int m = 0; m < dim_alice2; ++m)
                for (int m2 = 0; m2 < dim_alice2; ++m2)
                    sigma(b, b2) += gamma(m) * std::conj(gamma(m2)) *
                                    chi(chi_shape.flat(m, b), chi_shape.flat(m2, b2));
    return sigma;
}

TeleportOutcome outcome_from_conditional(const WeylIndex& idx, int family, Matrix sigma,
                                         const Vector& psi) {
    TeleportOutcome out;
    out.s = idx.s;
    out.t = idx.t;
    out.family = family;
    out.probability = sigma.trace().real();
    if (out.probability < kZeroProbability) {
        out.fidelity_after_correction = 1.0;
        out.fidelity_before_correction = 1.0;
        return out;
    }
    sigma /= out.probability;
    const Matrix correction = weyl_unitary(idx);
    const Matrix corrected = correction * sigma * correction.adjoint();
    out.fidelity_after_correction = psi.dot(corrected * psi).real();
    out.fidelity_before_correction = psi.dot(sigma * psi).real();
    return out;
}

}  // namespace

DensityMatrix mmes_resource_state(int d) {
    if (d < 2) throw std::invalid_argument("mmes_resource_state: d must be at least 2");
    const BipartiteShape shape{2 * d, d};
    Vector e1 = Vector::Zero(shape.total());
    Vector e2 = Vector::Zero(shape.total());
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        e1(shape.flat(i, i)) = inv_sqrt_d;
        e2(shape.flat(d + i, i)) = inv_sqrt_d;
    }
    const Matrix chi = 0.5 * (e1 * e1.adjoint()) + 0.5 * (e2 * e2.adjoint());
    return make_density_matrix(shape, chi);
}

std::vector<TeleportOutcome> simulate_teleport_with_resource(const DensityMatrix& resource,
                                                             const Vector& psi) {
    if (resource.shape.dim_a != 2 * resource.shape.dim_b)
        throw std::invalid_argument("teleport: resource must have shape (2d, d)");
    const int d = resource.shape.dim_b;
    if (psi.size() != d) throw std::invalid_argument("teleport: input dimension mismatch");
    check_input_ket(psi);

    const BipartiteShape alice_shape{d, 2 * d};
    std::vector<TeleportOutcome> outcomes;
    outcomes.reserve(2 * d * d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            for (int family = 1; family <= 2; ++family) {
                const WeylIndex idx{s, t, d};
                const Vector phi = generalized_bell(idx, family).state.amplitudes;
                Matrix sigma =
                    conditional_state(phi, psi, resource.matrix, resource.shape, alice_shape);
                outcomes.push_back(outcome_from_conditional(idx, family, std::move(sigma), psi));
            }
    return outcomes;
}

std::vector<TeleportOutcome> simulate_mmes_teleport(const Vector& psi) {
    const int d = static_cast<int>(psi.size());
    return simulate_teleport_with_resource(mmes_resource_state(d), psi);
}

double simulate_standard_teleport(const DensityMatrix& resource, const Vector& psi) {
    if (resource.shape.dim_a != resource.shape.dim_b)
        throw std::invalid_argument("standard teleport: resource must be square");
    const int d = resource.shape.dim_a;
    if (psi.size() != d)
        throw std::invalid_argument("standard teleport: input dimension mismatch");
    check_input_ket(psi);

    const BipartiteShape alice_shape{d, d};
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    double average = 0.0;
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            const WeylIndex idx{s, t, d};
            const Matrix u = weyl_unitary(idx);
            Vector phi = Vector::Zero(d * d);
            for (int k = 0; k < d; ++k)
                for (int i = 0; i < d; ++i) phi(alice_shape.flat(k, i)) = u(k, i) * inv_sqrt_d;
            Matrix sigma =
                conditional_state(phi, psi, resource.matrix, resource.shape, alice_shape);
            const TeleportOutcome out = outcome_from_conditional(idx, 1, std::move(sigma), psi);
            average += out.probability * out.fidelity_after_correction;
        }
    return average;
}

}  // namespace mmeslab
