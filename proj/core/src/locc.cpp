#include "mmeslab/locc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mmeslab/qmat.hpp"

namespace mmeslab {

namespace {

constexpr double kSupportCutoff = 1e-12;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::string setting_name(const MeasurementSetting& s) {
    return s.hadamard ? "hadamard(" + std::to_string(s.alpha) + ")" : "computational";
}

std::vector<MeasurementSetting> candidate_settings(int d, ConjugationConvention convention) {
    std::vector<MeasurementSetting> settings;
    settings.push_back({false, -1, Matrix::Identity(d, d), Matrix::Identity(2 * d, 2 * d)});
    for (int alpha = 0; alpha < d; ++alpha) {
        const Matrix h = gen_hadamard(alpha, d);
        const Matrix hp = gen_hadamard_block(alpha, d);
        if (convention == ConjugationConvention::BobConjugated)
            settings.push_back({true, alpha, h, hp.conjugate()});
        else
            settings.push_back({true, alpha, h.conjugate(), hp});
    }
    return settings;
}

}  // namespace

Matrix gen_hadamard(int alpha, int d) {
    if (d < 2) throw std::invalid_argument("gen_hadamard: d must be at least 2");
    if (alpha < 0 || alpha >= d) throw std::invalid_argument("gen_hadamard: alpha out of range");
    Matrix h(d, d);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const long tail = static_cast<long>(d + k) * (d - k + 1) / 2;  // sum_{i=k}^{d} i
            const long exponent = -(static_cast<long>(j) * k + static_cast<long>(alpha) * tail);
            const double angle = -2.0 * std::numbers::pi * exponent / d;
            h(j, k) = std::polar(inv_sqrt_d, angle);
        }
    return h;
}

Matrix gen_hadamard_block(int alpha, int d) {
    const Matrix h = gen_hadamard(alpha, d);
    Matrix hp = Matrix::Zero(2 * d, 2 * d);
    hp.topLeftCorner(d, d) = h;
    hp.bottomRightCorner(d, d) = h;
    return hp;
}

DensityMatrix chi_state(const WeylIndex& idx) {
    const Vector phi1 = generalized_bell(idx, 1).state.amplitudes;
    const Vector phi2 = generalized_bell(idx, 2).state.amplitudes;
    const Matrix chi = 0.5 * (phi1 * phi1.adjoint()) + 0.5 * (phi2 * phi2.adjoint());
    return make_density_matrix({idx.d, 2 * idx.d}, chi);
}

double ricochet_check(int j, const WeylIndex& idx, int family, RicochetForm form) {
    const int d = idx.d;
    const BipartiteShape shape{d, 2 * d};
    const Vector phi = generalized_bell(idx, family).state.amplitudes;
    const Matrix hp = gen_hadamard_block(j, d);
    const Matrix h = gen_hadamard(j, d);
    const Matrix u = weyl_unitary(idx);

    Matrix right_op;
    switch (form) {
        case RicochetForm::Transported:
            right_op = u * h.transpose() * u.adjoint();
            break;
        case RicochetForm::PlainTranspose:
            right_op = h.transpose();
            break;
        case RicochetForm::WrongSide:
            right_op = u * h * u.adjoint();
            break;
    }

    Vector lhs = Vector::Zero(shape.total());
    Vector rhs = Vector::Zero(shape.total());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < 2 * d; ++b) {
            for (int b2 = 0; b2 < 2 * d; ++b2) lhs(shape.flat(a, b)) += hp(b, b2) * phi(shape.flat(a, b2));
            for (int a2 = 0; a2 < d; ++a2) rhs(shape.flat(a, b)) += right_op(a, a2) * phi(shape.flat(a2, b));
        }
    return (lhs - rhs).norm();
}

std::vector<double> outcome_distribution(const MeasurementSetting& setting, const WeylIndex& idx) {
    const int d = idx.d;
    const BipartiteShape shape{d, 2 * d};
    std::vector<double> p(shape.total(), 0.0);
    for (int family = 1; family <= 2; ++family) {
        const Vector phi = generalized_bell(idx, family).state.amplitudes;
        // (V_A (x) V_B) phi without forming the full Kronecker product.
        Matrix m(d, 2 * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < 2 * d; ++b) m(a, b) = phi(shape.flat(a, b));
        const Matrix rotated = setting.alice_transform * m * setting.bob_transform.transpose();
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < 2 * d; ++b) p[shape.flat(a, b)] += 0.5 * std::norm(rotated(a, b));
    }
    return p;
}

DiscriminationProtocol discriminate(const std::vector<WeylIndex>& candidates, int d,
                                    ConjugationConvention convention) {
    if (!is_prime(d)) throw NonPrimeDimension(d);
    if (candidates.empty()) throw std::invalid_argument("discriminate: no candidates");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].d != d) throw std::invalid_argument("discriminate: candidate d mismatch");
        for (std::size_t k = 0; k < i; ++k)
            if (candidates[i].s == candidates[k].s && candidates[i].t == candidates[k].t)
                throw std::invalid_argument("discriminate: candidates must be distinct");
    }

    double best_overlap = std::numeric_limits<double>::infinity();
    std::string best_name;
    for (const MeasurementSetting& setting : candidate_settings(d, convention)) {
        std::vector<std::vector<double>> dists;
        dists.reserve(candidates.size());
        for (const WeylIndex& idx : candidates) dists.push_back(outcome_distribution(setting, idx));

        double overlap = 0.0;
        for (std::size_t i = 0; i < dists.size(); ++i)
            for (std::size_t k = 0; k < i; ++k)
                for (std::size_t o = 0; o < dists[i].size(); ++o)
                    overlap += std::min(dists[i][o], dists[k][o]);

        if (overlap < best_overlap) {
            best_overlap = overlap;
            best_name = setting_name(setting);
        }

        bool disjoint = true;
        std::vector<int> lookup(2 * d * d, -1);
        for (std::size_t c = 0; c < dists.size() && disjoint; ++c)
            for (std::size_t o = 0; o < dists[c].size(); ++o) {
                if (dists[c][o] <= kSupportCutoff) continue;
                if (lookup[o] != -1 && lookup[o] != static_cast<int>(c)) {
                    disjoint = false;
                    break;
                }
                lookup[o] = static_cast<int>(c);
            }
        if (disjoint)
            return DiscriminationProtocol{setting, candidates, std::move(lookup), 1.0};
    }
    throw NoPerfectSetting(best_overlap, best_name);
}

double sample_run(const DiscriminationProtocol& protocol, const WeylIndex& secret, int trials,
                  Rng& rng) {
    int secret_pos = -1;
    for (std::size_t i = 0; i < protocol.candidates.size(); ++i)
        if (protocol.candidates[i].s == secret.s && protocol.candidates[i].t == secret.t &&
            protocol.candidates[i].d == secret.d)
            secret_pos = static_cast<int>(i);
    if (secret_pos < 0) throw std::invalid_argument("sample_run: secret not among candidates");

    const std::vector<double> dist = outcome_distribution(protocol.setting, secret);
    // Fallback for the residual fp mass beyond sum(dist): the likeliest outcome.
    const std::size_t fallback =
        std::distance(dist.begin(), std::max_element(dist.begin(), dist.end()));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int successes = 0;
    for (int trial = 0; trial < trials; ++trial) {
        double r = u01(rng);
        std::size_t outcome = fallback;
        for (std::size_t o = 0; o < dist.size(); ++o) {
            if (r < dist[o]) {
                outcome = o;
                break;
            }
            r -= dist[o];
        }
        if (protocol.lookup[outcome] == secret_pos) ++successes;
    }
    return static_cast<double>(successes) / trials;
}

}  // namespace mmeslab
