#include "mmeslab/verify_suite.hpp"

#include <cmath>

#include "mmeslab/locc.hpp"
#include "mmeslab/measures.hpp"
#include "mmeslab/mmes.hpp"
#include "mmeslab/qmat.hpp"
#include "mmeslab/teleport.hpp"
#include "mmeslab/weyl.hpp"

namespace mmeslab::cli {

namespace {

std::string tag(const char* name, int d) { return std::string(name) + "-d" + std::to_string(d); }

DensityMatrix rho_p_state(double p) {
    const BipartiteShape shape{2, 4};
    Vector psi1 = Vector::Zero(8), psi2 = Vector::Zero(8);
    psi1(shape.flat(0, 0)) = psi1(shape.flat(1, 1)) = 1.0 / std::sqrt(2.0);
    psi2(shape.flat(0, 2)) = psi2(shape.flat(1, 3)) = 1.0 / std::sqrt(2.0);
    const Matrix m = (1.0 - p) * (psi1 * psi1.adjoint()).eval() +
                     p * (psi2 * psi2.adjoint()).eval();
    return make_density_matrix(shape, m);
}

DensityMatrix random_max_entangled_mixture(int d, int rank, Rng& rng) {
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < rank; ++i) {
        const Matrix v = haar_random_unitary(d, rng);
        const Matrix w = haar_random_unitary(d, rng);
        Vector ket = Vector::Zero(d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int k = 0; k < d; ++k)
                    ket(a * d + b) += v(a, k) * w(b, k) / std::sqrt(static_cast<double>(d));
        m += (ket * ket.adjoint()) / rank;
    }
    return make_density_matrix({d, d}, m);
}

void per_dimension_checks(std::vector<Verdict>& out, int d, double tol, std::uint64_t seed) {
    {
        const UnitaryBasisReport basis = verify_unitary_basis(d, seed);
        const double worst =
            std::max({basis.max_unitarity_deviation, basis.max_orthogonality_deviation,
                      basis.max_expansion_residual});
        out.push_back({tag("weyl-basis", d), basis.ok() && worst <= 1e-10, worst, ""});
    }
    {
        Matrix completeness = Matrix::Zero(2 * d * d, 2 * d * d);
        double ortho_dev = 0.0;
        double reduced_dev = 0.0;
        std::vector<Vector> states;
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t)
                for (int family : {1, 2}) {
                    const GeneralizedBellState bell = generalized_bell({s, t, d}, family);
                    states.push_back(bell.state.amplitudes);
                    completeness += states.back() * states.back().adjoint();
                    const Matrix reduced = partial_trace(density_from_pure(bell.state).matrix,
                                                         bell.state.shape, Subsystem::A);
                    reduced_dev = std::max(
                        reduced_dev,
                        (reduced - Matrix::Identity(d, d) / d).cwiseAbs().maxCoeff());
                }
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j) {
                const Complex overlap = states[i].dot(states[j]);
                ortho_dev = std::max(
                    ortho_dev, std::abs(overlap - Complex(i == j ? 1.0 : 0.0, 0.0)));
            }
        const double completeness_dev =
            (completeness - Matrix::Identity(2 * d * d, 2 * d * d)).cwiseAbs().maxCoeff();
        out.push_back({tag("bell-completeness", d), completeness_dev <= 1e-10, completeness_dev,
                       ""});
        out.push_back({tag("bell-orthonormality", d), ortho_dev <= 1e-10, ortho_dev, ""});
        out.push_back({tag("bell-reduced-identity", d), reduced_dev <= 1e-10, reduced_dev, ""});
    }
    {
        double worst = 0.0;
        for (int j = 0; j < d; ++j)
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t)
                    for (int family : {1, 2})
                        worst = std::max(worst, ricochet_check(j, {s, t, d}, family));
        out.push_back({tag("ricochet", d), worst <= 1e-10, worst, ""});
    }
    {
        Rng rng(seed + d);
        const DensityMatrix good = construct_mmes(random_mmes_spec(d, 2, 2 * d, rng));
        const MmesCertificate cert = is_mmes(good, Subsystem::A, tol);
        const double worst =
            std::max({cert.worst_schmidt_deviation, cert.worst_cross_trace_norm,
                      cert.reduced_small_side_deviation});
        out.push_back({tag("mmes-certify", d), cert.verdict, worst, "random rank-2 construction"});

        const DensityMatrix bad = random_max_entangled_mixture(d, 2, rng);
        const MmesCertificate reject = is_mmes(bad, Subsystem::A, tol);
        const double reject_worst =
            std::max({reject.worst_schmidt_deviation, reject.worst_cross_trace_norm,
                      reject.reduced_small_side_deviation});
        out.push_back({tag("mmes-reject-square", d), !reject.verdict, reject_worst,
                       "rank-2 mixture in square dimensions"});
    }
    {
        Rng rng(seed + 31 * d);
        double min_fidelity = 1.0;
        double uniformity = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            const Vector psi = haar_random_ket(d, rng);
            for (const TeleportOutcome& o : simulate_mmes_teleport(psi)) {
                min_fidelity = std::min(min_fidelity, o.fidelity_after_correction);
                uniformity =
                    std::max(uniformity, std::abs(o.probability - 1.0 / (2.0 * d * d)));
            }
        }
        out.push_back({tag("teleport-fidelity", d), min_fidelity >= 1.0 - 1e-9, min_fidelity,
                       "min corrected fidelity over 3 random inputs"});
        out.push_back({tag("teleport-uniformity", d), uniformity <= 1e-10, uniformity, ""});
    }
    {
        Rng rng(seed + 77 * d);
        Vector phi = Vector::Zero(d * d);
        for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
        const FefResult pure = fully_entangled_fraction(
            make_density_matrix({d, d}, phi * phi.adjoint()), {.restarts = 8}, rng);
        out.push_back({tag("fef-pure", d), std::abs(pure.value - 1.0) <= 1e-6, pure.value, ""});

        const FefResult mixed = fully_entangled_fraction(
            make_density_matrix({d, d}, Matrix::Identity(d * d, d * d) / (d * d)),
            {.restarts = 2}, rng);
        out.push_back({tag("fef-isotropic", d), std::abs(mixed.value - 1.0 / (d * d)) <= 1e-10,
                       mixed.value, ""});
    }
    if (d == 2 || d == 3 || d == 5) {
        int failures = 0;
        double worst_rate = 1.0;
        Rng rng(seed + 13 * d);
        std::vector<WeylIndex> all;
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t) all.push_back({s, t, d});
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                try {
                    const auto protocol = discriminate({all[i], all[j]}, d);
                    worst_rate = std::min(worst_rate, sample_run(protocol, all[i], 50, rng));
                } catch (const NoPerfectSetting&) {
                    ++failures;
                }
            }
        out.push_back({tag("locc-pairs", d), failures == 0 && worst_rate == 1.0, worst_rate,
                       "exhaustive pair scan"});
    }
}

}  // namespace

std::vector<Verdict> channel_checks(const KrausChannel& channel) {
    std::vector<Verdict> out;
    const auto dim = channel.operators[0].rows();
    Matrix completeness = Matrix::Zero(dim, dim);
    for (const Matrix& m : channel.operators) completeness += m.adjoint() * m;
    const double dev =
        (completeness - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    out.push_back({"kraus-completeness", channel.trace_preserving && dev <= 1e-10, dev,
                   "sum M^dagger M vs identity"});
    if (!channel.trace_preserving) return out;  // nothing else is well-defined

    const EvolutionReport evolution = evolution_report(channel, rho_p_state(0.3), Subsystem::B);
    out.push_back({"channel-preserves-mmes",
                   evolution.mmes_before.verdict && evolution.mmes_after.verdict,
                   std::max(evolution.mmes_after.worst_schmidt_deviation,
                            evolution.mmes_after.worst_cross_trace_norm),
                   "certificates before and after"});
    out.push_back({"channel-preserves-negativity",
                   std::abs(evolution.negativity_before - 0.5) <= 1e-8 &&
                       std::abs(evolution.negativity_after - 0.5) <= 1e-8,
                   evolution.negativity_after, ""});
    out.push_back({"channel-preserves-teleportation",
                   evolution.min_corrected_fidelity.value_or(0.0) >= 1.0 - 1e-9,
                   evolution.min_corrected_fidelity.value_or(0.0), ""});

    Vector phi4 = Vector::Zero(16);
    for (int i = 0; i < 4; ++i) phi4(i * 4 + i) = 0.5;
    const EvolutionReport drop = evolution_report(
        channel, make_density_matrix({4, 4}, phi4 * phi4.adjoint()), Subsystem::B);
    out.push_back({"channel-decreases-entanglement",
                   drop.negativity_before - drop.negativity_after >= 0.1,
                   drop.negativity_before - drop.negativity_after,
                   "negativity drop on the 4x4 maximally entangled input"});
    return out;
}

std::vector<Verdict> verification_suite(const std::vector<int>& dims, double tol,
                                        std::uint64_t seed) {
    std::vector<Verdict> out;
    for (int d : dims) per_dimension_checks(out, d, tol, seed);

    for (const Verdict& v : channel_checks(swap_noise_channel())) out.push_back(v);

    {
        const XxzGroundState ground = xxz_ground_state({.j = 1.0, .delta = 1.0});
        out.push_back({"xxz-ground-energy", std::abs(ground.energy + 1.25) <= 1e-9,
                       ground.energy, "isotropic point"});
        out.push_back({"xxz-ground-degeneracy", ground.degeneracy == 3,
                       static_cast<double>(ground.degeneracy), ""});
    }
    {
        Rng rng(seed + 999);
        const DensityMatrix example = rho_p_state(0.5);
        const DecompositionAudit audit = decomposition_audit(example, Subsystem::A, 20, rng);
        out.push_back({"decomposition-audit-2x4", std::abs(audit.min_eof - 1.0) <= 1e-8,
                       audit.min_eof, "min eof over random decompositions"});
    }
    {
        Rng rng(seed + 4242);
        std::normal_distribution<double> gauss;
        double eig_resid = 0.0, schmidt_resid = 0.0, haar_dev = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 15);
            Matrix g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
            const Matrix h = 0.5 * (g + g.adjoint());
            const EigResult eig = hermitian_eig(h);
            const Matrix rec = eig.vectors *
                               eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                               eig.vectors.adjoint();
            eig_resid = std::max(eig_resid, (rec - h).cwiseAbs().maxCoeff());

            const BipartiteShape shape{2 + static_cast<int>(rng() % 3),
                                       2 + static_cast<int>(rng() % 4)};
            const PureState psi = make_pure_state(shape, haar_random_ket(shape.total(), rng));
            const SchmidtResult sd = schmidt_decompose(psi);
            Vector rebuilt = Vector::Zero(shape.total());
            for (int i = 0; i < sd.coefficients.size(); ++i)
                rebuilt += sd.coefficients(i) * tensor_product(Matrix(sd.a_basis.col(i)),
                                                               Matrix(sd.b_basis.col(i)));
            schmidt_resid =
                std::max(schmidt_resid, (rebuilt - psi.amplitudes).cwiseAbs().maxCoeff());

            const Matrix u = haar_random_unitary(2 + static_cast<int>(rng() % 7), rng);
            haar_dev = std::max(haar_dev, (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
                                              .cwiseAbs()
                                              .maxCoeff());
        }
        out.push_back({"eig-reconstruction", eig_resid <= 1e-10, eig_resid, ""});
        out.push_back({"schmidt-reconstruction", schmidt_resid <= 1e-10, schmidt_resid, ""});
        out.push_back({"haar-unitarity", haar_dev <= 1e-10, haar_dev, ""});
    }
    return out;
}

}  // namespace mmeslab::cli
