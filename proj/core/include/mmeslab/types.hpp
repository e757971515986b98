#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <stdexcept>

namespace mmeslab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// All randomized operations take an explicit stream; no hidden global state.
using Rng = std::mt19937_64;

enum class Subsystem { A, B };

inline const char* subsystem_name(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

// Bipartite dimensions (dA, dB). The flat index convention is fixed once,
// project-wide: pair (a, b) maps to a*dB + b, row-major.
struct BipartiteShape {
    int dim_a = 0;
    int dim_b = 0;

    int total() const { return dim_a * dim_b; }
    int dim(Subsystem s) const { return s == Subsystem::A ? dim_a : dim_b; }
    int small_dim() const { return dim_a < dim_b ? dim_a : dim_b; }
    int large_dim() const { return dim_a < dim_b ? dim_b : dim_a; }
    Subsystem small_side() const { return dim_a <= dim_b ? Subsystem::A : Subsystem::B; }
    int flat(int a, int b) const { return a * dim_b + b; }
    BipartiteShape swapped() const { return {dim_b, dim_a}; }

    bool operator==(const BipartiteShape&) const = default;
};

// Normalized ket over a bipartite cut. Build through make_pure_state so the
// norm invariant is enforced at the boundary.
struct PureState {
    BipartiteShape shape;
    Vector amplitudes;
};

// Hermitian, unit-trace, PSD operator tagged with its bipartite shape.
struct DensityMatrix {
    BipartiteShape shape;
    Matrix matrix;
};

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
// Admits round-off from channel application chains.
inline constexpr double kPsdTolerance = -1e-9;

PureState make_pure_state(BipartiteShape shape, Vector amplitudes);
DensityMatrix make_density_matrix(BipartiteShape shape, Matrix m);
// Skips validation; for intermediates that intentionally break the invariants
// (e.g. the output of a non-trace-preserving channel under an override flag).
DensityMatrix density_unchecked(BipartiteShape shape, Matrix m);
DensityMatrix density_from_pure(const PureState& psi);

}  // namespace mmeslab
