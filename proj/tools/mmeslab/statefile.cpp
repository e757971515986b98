#include "mmeslab/statefile.hpp"

#include <fstream>

namespace mmeslab::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Complex entry_at(const json& data, std::size_t i) {
    const json& pair = data.at(i);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw StateFileError("data entry " + std::to_string(i) + " is not an [re, im] pair");
    return {pair[0].get<double>(), pair[1].get<double>()};
}

json pair_of(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

LoadedState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StateFileError("cannot open state file: " + path);

    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw StateFileError(std::string("cannot parse state file: ") + e.what());
    }

    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2)
        throw StateFileError("state file needs \"dims\": [dA, dB]");
    const int da = j["dims"][0].get<int>();
    const int db = j["dims"][1].get<int>();
    if (da < 1 || db < 1) throw StateFileError("dims must be positive");
    const BipartiteShape shape{da, db};
    const int n = shape.total();

    if (!j.contains("kind") || !j["kind"].is_string())
        throw StateFileError("state file needs \"kind\": \"density\" or \"pure\"");
    const std::string kind = j["kind"].get<std::string>();
    if (!j.contains("data") || !j["data"].is_array())
        throw StateFileError("state file needs a \"data\" array");
    const json& data = j["data"];

    if (kind == "pure") {
        if (static_cast<int>(data.size()) != n)
            throw StateFileError("pure state data must have dA*dB entries");
        Vector amp(n);
        for (int i = 0; i < n; ++i) amp(i) = entry_at(data, i);
        return make_pure_state(shape, std::move(amp));
    }
    if (kind == "density") {
        if (static_cast<long>(data.size()) != static_cast<long>(n) * n)
            throw StateFileError("density data must have (dA*dB)^2 entries, row-major");
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) m(i, k) = entry_at(data, static_cast<std::size_t>(i) * n + k);
        return make_density_matrix(shape, std::move(m));
    }
    throw StateFileError("unknown kind \"" + kind + "\" (expected \"density\" or \"pure\")");
}

DensityMatrix as_density(const LoadedState& state) {
    if (std::holds_alternative<DensityMatrix>(state)) return std::get<DensityMatrix>(state);
    return density_from_pure(std::get<PureState>(state));
}

ordered_json pure_to_json(const PureState& psi) {
    ordered_json j;
    j["dims"] = {psi.shape.dim_a, psi.shape.dim_b};
    j["kind"] = "pure";
    json data = json::array();
    for (int i = 0; i < psi.amplitudes.size(); ++i) data.push_back(pair_of(psi.amplitudes(i)));
    j["data"] = std::move(data);
    return j;
}

ordered_json density_to_json(const DensityMatrix& rho) {
    ordered_json j;
    j["dims"] = {rho.shape.dim_a, rho.shape.dim_b};
    j["kind"] = "density";
    json data = json::array();
    for (int i = 0; i < rho.matrix.rows(); ++i)
        for (int k = 0; k < rho.matrix.cols(); ++k) data.push_back(pair_of(rho.matrix(i, k)));
    j["data"] = std::move(data);
    return j;
}

void save_state_file(const std::string& path, const ordered_json& state) {
    std::ofstream out(path);
    if (!out) throw StateFileError("cannot write state file: " + path);
    out << state.dump(2) << "\n";
}

}  // namespace mmeslab::cli
