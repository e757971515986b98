#pragma once

#include "mmeslab/types.hpp"

namespace mmeslab {

// Kronecker product, row-major index convention (a-index major, b-index minor).
Matrix tensor_product(const Matrix& a, const Matrix& b);

// Reduced operator of the kept subsystem. Works on any square operator with
// the given shape (cross terms |psi><phi| included), trace is preserved.
Matrix partial_trace(const Matrix& m, BipartiteShape shape, Subsystem keep);
Matrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Transposition applied on the chosen index pair; an exact entry permutation,
// applying it twice returns the input bit for bit.
Matrix partial_transpose(const Matrix& m, BipartiteShape shape, Subsystem side);
Matrix partial_transpose(const DensityMatrix& rho, Subsystem side);

// Reorders a bipartite operator from (A,B) to (B,A) indexing.
Matrix swap_subsystems(const Matrix& m, BipartiteShape shape);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix& m);

struct EigResult {
    RealVector values;  // descending
    Matrix vectors;     // orthonormal columns, matching order
};

// Contract: V Lambda V^dagger reconstructs the input within 1e-10 per entry
// and V^dagger V = I within 1e-10. Throws on non-Hermitian input (1e-8).
EigResult hermitian_eig(const Matrix& m);

struct SchmidtResult {
    RealVector coefficients;  // nonnegative, descending, sum of squares = 1
    Matrix a_basis;           // dA x r, orthonormal columns
    Matrix b_basis;           // dB x r, orthonormal columns
};

// sum_i coefficients[i] * a_basis.col(i) (x) b_basis.col(i) reconstructs psi.
// Degenerate coefficients may come back in any orthonormal basis of the
// degenerate block.
SchmidtResult schmidt_decompose(const PureState& psi);

// Complex Ginibre draw orthonormalized by QR, phases fixed so the diagonal of
// the triangular factor is positive. Deterministic given the stream state.
Matrix haar_random_unitary(int dim, Rng& rng);

// Normalized complex-Gaussian ket of the given dimension (uniform on the sphere).
Vector haar_random_ket(int dim, Rng& rng);

// |<psi|phi>|^2
double fidelity_pure(const PureState& psi, const PureState& phi);
double fidelity_pure(const Vector& psi, const Vector& phi);

// Basis ket |i> of the given dimension.
Vector basis_ket(int dim, int i);

}  // namespace mmeslab
