#pragma once

#include <cstdint>
#include <vector>

#include "mmeslab/channels.hpp"
#include "mmeslab/report.hpp"

namespace mmeslab::cli {

// The full invariant suite behind `mmeslab verify`: unitary-basis and Bell
// completeness checks, transport identities, certificate soundness on random
// constructions, teleportation sweeps, channel claims, the exchange-chain
// ground sector, and the numerical-core contracts.
std::vector<Verdict> verification_suite(const std::vector<int>& dims, double tol,
                                        std::uint64_t seed);

// Channel-facing subset, parameterized so a miswired channel is flagged.
std::vector<Verdict> channel_checks(const KrausChannel& channel);

}  // namespace mmeslab::cli
