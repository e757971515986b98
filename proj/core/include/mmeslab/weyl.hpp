#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmeslab/types.hpp"

namespace mmeslab {

// Label (s, t) of the shift/clock unitary U_st = h^t g^s in dimension d,
// with h|j> = |(j+1) mod d>, g|j> = omega^j |j>, omega = exp(-2 i pi / d).
struct WeylIndex {
    int s = 0;
    int t = 0;
    int d = 2;
};

// d x d unitary U_st; U_00 is the identity.
Matrix weyl_unitary(const WeylIndex& idx);

// One of the 2 d^2 maximally entangled basis states of a d (x) 2d system:
// family 1 seeds sum_i |i, i>, family 2 seeds sum_i |i, d+i>, both pushed
// through U_st on the small side.
struct GeneralizedBellState {
    WeylIndex index;
    int family = 1;  // 1 or 2
    PureState state; // shape (d, 2d)
};

GeneralizedBellState generalized_bell(const WeylIndex& idx, int family);

struct UnitaryBasisReport {
    double max_unitarity_deviation = 0.0;
    double max_orthogonality_deviation = 0.0;
    double max_expansion_residual = 0.0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Checks that a candidate basis behaves like {U_st}: each element unitary,
// pairwise trace-orthogonal with norm sqrt(d), and complete in the sense that
// W = (1/d) sum Tr(U^dagger W) U reproduces random matrices.
UnitaryBasisReport verify_unitary_basis(const std::vector<Matrix>& basis, int d,
                                        std::uint64_t seed = 0x5eedULL);
UnitaryBasisReport verify_unitary_basis(int d, std::uint64_t seed = 0x5eedULL);

// The d^2 operators U_st in s-major order.
std::vector<Matrix> weyl_basis(int d);

}  // namespace mmeslab
