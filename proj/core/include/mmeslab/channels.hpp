#pragma once

#include <optional>
#include <vector>

#include "mmeslab/mmes.hpp"
#include "mmeslab/types.hpp"

namespace mmeslab {

struct KrausChannel {
    std::vector<Matrix> operators;
    bool trace_preserving = false;  // sum M^dagger M = I within 1e-10
};

// Validates equal dimensions and the completeness sum; never throws on a
// non-trace-preserving set, it just records the flag.
KrausChannel make_channel(std::vector<Matrix> operators);

// { I/sqrt(2), P/sqrt(2) } on a 4-dim system, where P swaps the halves
// {|0>,|1>} <-> {|2>,|3>}. Trace preserving.
KrausChannel swap_noise_channel();

// Same operators with coefficients 1/2 instead of 1/sqrt(2); the completeness
// sum is I/2, so the channel is flagged as not trace preserving. Kept as a
// constructible negative control.
KrausChannel swap_noise_channel_literal();

// sum_k (I (x) M_k) rho (I (x) M_k)^dagger, or mirrored for side A. Applying
// a non-trace-preserving channel requires the explicit override flag and
// yields an unvalidated operator.
DensityMatrix apply_one_sided(const KrausChannel& ch, const DensityMatrix& rho, Subsystem side,
                              bool allow_non_trace_preserving = false);

struct EvolutionReport {
    double negativity_before = 0.0;
    double negativity_after = 0.0;
    MmesCertificate mmes_before;
    MmesCertificate mmes_after;
    // Minimum corrected teleportation fidelity of the output used as a
    // resource; present only when its shape is (2d, d) or (d, 2d), d >= 2.
    std::optional<double> min_corrected_fidelity;
};

// Entanglement bookkeeping around one channel application: negativity and
// certificate before/after, plus teleportation usability when shapes permit.
EvolutionReport evolution_report(const KrausChannel& ch, const DensityMatrix& rho,
                                 Subsystem side);

// Couplings of the two-site anisotropic exchange Hamiltonian
// H = J (Sx Sx + Sy Sy) + Delta (Sz Sz) for spins 1/2 and 3/2.
struct XxzParams {
    double j = 1.0;
    double delta = 1.0;
    double spin_a = 0.5;
    double spin_b = 1.5;

    bool standard_regime() const { return delta >= j && j > 0.0; }
};

struct XxzGroundState {
    double energy = 0.0;
    int degeneracy = 0;
    std::vector<PureState> states;  // orthonormal ground manifold basis
    double eof_of_first = 0.0;      // basis-dependent when the manifold is degenerate
    bool regime_flagged = false;    // true when (J, Delta) leaves Delta >= J > 0
};

// Exact diagonalization of the 8x8 Hamiltonian; ground eigenvalues within
// 1e-9 of the minimum count toward the degeneracy.
XxzGroundState xxz_ground_state(const XxzParams& params);

// Spin matrices for spin s, basis ordered m = s, s-1, ..., -s; hbar = 1.
Matrix spin_x(double s);
Matrix spin_y(double s);
Matrix spin_z(double s);

}  // namespace mmeslab
