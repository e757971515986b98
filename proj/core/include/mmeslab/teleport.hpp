#pragma once

#include <vector>

#include "mmeslab/types.hpp"

namespace mmeslab {

// One measurement branch of the qudit protocol: label of the projector Alice
// saw, its probability, and the fidelity of Bob's state to the input before
// and after he applies the announced correction U_st.
struct TeleportOutcome {
    int s = 0;
    int t = 0;
    int family = 1;
    double probability = 0.0;
    double fidelity_after_correction = 0.0;
    double fidelity_before_correction = 0.0;
};

// The rank-2 resource (1/2)|e1><e1| + (1/2)|e2><e2| on a 2d (x) d cut, with
// e1 = (1/sqrt d) sum |i,i> and e2 = (1/sqrt d) sum |d+i,i>. Certifiable as
// mixed maximally entangled with small side B.
DensityMatrix mmes_resource_state(int d);

// Full Born-rule sweep of all 2 d^2 generalized Bell outcomes for a d-dim
// input teleported through the given 2d (x) d resource. Direct projector
// arithmetic; no closed-form expansion is assumed.
std::vector<TeleportOutcome> simulate_teleport_with_resource(const DensityMatrix& resource,
                                                             const Vector& psi);

// Same sweep with the canonical resource from mmes_resource_state.
std::vector<TeleportOutcome> simulate_mmes_teleport(const Vector& psi);

// Standard d (x) d protocol: family-1 Bell projectors and U_st corrections.
// Returns the outcome-averaged fidelity sum_p p * f. Branches with
// probability below 1e-12 count fidelity 1 by convention.
double simulate_standard_teleport(const DensityMatrix& resource, const Vector& psi);

}  // namespace mmeslab
