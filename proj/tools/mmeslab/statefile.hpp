#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "mmeslab/types.hpp"

namespace mmeslab::cli {

// On-disk state format:
//   { "dims": [dA, dB], "kind": "density" | "pure",
//     "data": [[re, im], ...] }  (row-major matrix rows, or the flat ket)
// Loading enforces the type invariants (norm / trace / Hermiticity / PSD);
// violations surface as std::invalid_argument naming the invariant.

class StateFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using LoadedState = std::variant<PureState, DensityMatrix>;

LoadedState load_state_file(const std::string& path);

// Any loaded state as a density operator.
DensityMatrix as_density(const LoadedState& state);

nlohmann::ordered_json pure_to_json(const PureState& psi);
nlohmann::ordered_json density_to_json(const DensityMatrix& rho);
void save_state_file(const std::string& path, const nlohmann::ordered_json& state);

}  // namespace mmeslab::cli
