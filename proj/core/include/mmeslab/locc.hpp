#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mmeslab/types.hpp"
#include "mmeslab/weyl.hpp"

namespace mmeslab {

// Generalized Hadamard H_alpha with entries
// (1/sqrt d) omega^{-jk - alpha T(k)}, T(k) = sum_{i=k}^{d} i, 0-based j, k.
// A Fourier matrix times a diagonal phase, hence unitary for every alpha.
Matrix gen_hadamard(int alpha, int d);

// Block doubling H_alpha (+) H_alpha acting on the 2d-dim side.
Matrix gen_hadamard_block(int alpha, int d);

// Equal mixture of the two generalized Bell families at (s, t); shape (d, 2d).
DensityMatrix chi_state(const WeylIndex& idx);

// Which right-hand operator the transpose-transport identity is checked
// against. Transported is the form that holds for every (s, t): an operator
// applied to the 2d side of |Phi_st> equals its transpose conjugated through
// U_st on the d side. PlainTranspose omits the conjugation (only valid at
// s = t = 0); WrongSide omits the transpose. Both serve as negative controls.
enum class RicochetForm { Transported, PlainTranspose, WrongSide };

// Euclidean norm of (I (x) H'_j)|Phi^f_st> minus the chosen right-hand side.
double ricochet_check(int j, const WeylIndex& idx, int family,
                      RicochetForm form = RicochetForm::Transported);

struct MeasurementSetting {
    bool hadamard = false;  // false: computational basis on both sides
    int alpha = -1;
    Matrix alice_transform;  // d x d unitary
    Matrix bob_transform;    // 2d x 2d unitary
};

// Which party applies the conjugated transform in the Hadamard settings.
enum class ConjugationConvention { BobConjugated, AliceConjugated };

struct DiscriminationProtocol {
    MeasurementSetting setting;
    std::vector<WeylIndex> candidates;
    // Joint outcome (a, b) flattened as a * 2d + b -> candidate position;
    // -1 marks outcomes no candidate can produce.
    std::vector<int> lookup;
    double success_probability = 0.0;
};

class NonPrimeDimension : public std::invalid_argument {
  public:
    explicit NonPrimeDimension(int d)
        : std::invalid_argument("discriminate: dimension " + std::to_string(d) +
                                " is not prime") {}
};

class NoPerfectSetting : public std::runtime_error {
  public:
    NoPerfectSetting(double best_overlap, std::string best_setting)
        : std::runtime_error("discriminate: no setting with disjoint supports (best overlap " +
                             std::to_string(best_overlap) + " at " + best_setting + ")"),
          best_overlap(best_overlap),
          best_setting(std::move(best_setting)) {}

    double best_overlap;
    std::string best_setting;
};

// Outcome distribution of chi_state(idx) measured in the given setting;
// indexed a * 2d + b.
std::vector<double> outcome_distribution(const MeasurementSetting& setting, const WeylIndex& idx);

// Scans the computational setting and the d Hadamard settings for one whose
// per-candidate outcome supports are pairwise disjoint. Candidates must be
// distinct and d prime. Throws NoPerfectSetting with the best-overlap witness
// if the scan fails.
DiscriminationProtocol discriminate(
    const std::vector<WeylIndex>& candidates, int d,
    ConjugationConvention convention = ConjugationConvention::BobConjugated);

// Monte-Carlo run: sample outcomes from the secret's distribution, answer via
// the lookup, return the success rate.
double sample_run(const DiscriminationProtocol& protocol, const WeylIndex& secret, int trials,
                  Rng& rng);

}  // namespace mmeslab
