#pragma once

#include <vector>

#include "mmeslab/types.hpp"

namespace mmeslab {

// Recipe for a rank-k mixed maximally entangled state in d (x) d': weights
// p_m and, per m, a d' x d matrix whose columns are the B-side vectors
// paired with the small-side basis. Columns must be orthonormal within each
// block and across blocks, which forces d' >= k d.
struct MmesSpec {
    int d = 2;
    std::vector<double> weights;
    std::vector<Matrix> b_blocks;
};

// sum_m p_m |psi_m><psi_m| with psi_m = (1/sqrt d) sum_i |i> (x) |i_m>.
DensityMatrix construct_mmes(const MmesSpec& spec);

// Haar-random spec: k blocks of d orthonormal columns drawn jointly in
// dimension d_prime (requires d_prime >= k d), weights uniform in [0.2, 1]
// then normalized.
MmesSpec random_mmes_spec(int d, int k, int d_prime, Rng& rng);

// Machine-checkable evidence for or against membership in the mixed
// maximally entangled family, relative to the declared small side.
struct MmesCertificate {
    bool verdict = false;
    int rank = 0;
    std::vector<double> eigenvalues;          // full spectrum, descending
    double worst_schmidt_deviation = 0.0;     // max_i |lambda_i - 1/sqrt d| over kept vectors
    double worst_cross_trace_norm = 0.0;      // max Hilbert-Schmidt norm of Tr_large |v_m><v_n|
    double reduced_small_side_deviation = 0.0;  // max entry of |rho_small - I/d|
    Subsystem small_side = Subsystem::A;
    double tolerance = 0.0;
    double rank_cutoff = 0.0;
};

// Eigendecomposes rho (eigenvalues above the 1e-10 cutoff kept), canonicalizes
// degenerate eigenspaces by jointly block-diagonalizing the B-side overlap
// forms, then requires: every kept eigenvector maximally entangled across the
// cut, vanishing cross partial traces over the large side, and reduced state
// I/d on the small side. A false verdict is a result, not an error.
MmesCertificate is_mmes(const DensityMatrix& rho, Subsystem small_side, double tol = 1e-8);

struct DecompositionAudit {
    double min_eof = 0.0;
    double max_eof = 0.0;
    int trials = 0;
    int elements_checked = 0;
};

// Draws Haar unitaries of size >= rank (alternating rank and rank+1), forms
// the induced pure-state decompositions of rho, and evaluates eof_pure on
// every element with weight above 1e-12.
DecompositionAudit decomposition_audit(const DensityMatrix& rho, Subsystem small_side, int trials,
                                       Rng& rng);

}  // namespace mmeslab
