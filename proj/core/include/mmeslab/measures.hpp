#pragma once

#include "mmeslab/types.hpp"

namespace mmeslab {

// -sum lambda_i log2 lambda_i with 0 log 0 := 0. Eigenvalues in [-1e-8, 0)
// are clamped to zero; anything below -1e-8 throws.
double von_neumann_entropy(const Matrix& m);

// Entropy (bits) of the reduced operator of either subsystem; both sides agree.
double eof_pure(const PureState& psi);

// (trace norm of the partial transpose - 1) / 2; side of transpose irrelevant.
double negativity(const DensityMatrix& rho);

struct FefOptions {
    int restarts = 32;     // Haar starts in addition to the deterministic identity start
    int max_iter = 1000;
    double tol = 1e-12;    // stagnation threshold on |dF|
};

struct FefResult {
    double value = 0.0;
    Matrix optimizer;        // d x d unitary attaining value
    int restarts_used = 0;   // ascent runs performed (identity start included)
    bool converged = false;  // best run stagnated before max_iter
};

// Objective (1/d) v(U)^dagger rho v(U), where v(U) carries U(b,a) at pair
// index (a,b); equals <Phi|(I (x) U^T-conjugate form)rho(...)|Phi> overlap
// with the maximally entangled seed reachable by a one-sided unitary.
double fef_objective(const DensityMatrix& rho, const Matrix& u);

// Projected power ascent: apply rho to v(U), reshape to d x d, replace U by
// the unitary polar factor, repeat to stagnation; best over all starts wins,
// ties broken by lowest start index. Requires a square shape.
FefResult fully_entangled_fraction(const DensityMatrix& rho, const FefOptions& opts, Rng& rng);
FefResult fully_entangled_fraction(const DensityMatrix& rho, Rng& rng);

// (d * fef + 1) / (d + 1)
double optimal_teleport_fidelity(double fef, int d);

}  // namespace mmeslab
