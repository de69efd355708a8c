#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pntsi/bounds.hpp"

namespace pntsi {

/// Which error-constant assembly a search minimizes.
enum class Objective { psi2_at_x, psi2_limit, psi3_at_x };

struct ObjectiveSpec {
    Objective kind = Objective::psi2_at_x;
    double x = theorem_x_min;  ///< evaluation point (psi2_at_x / psi3_at_x)
    double eps = 0.25;         ///< exponent parameter (psi2_at_x)
};

/// Box bounds over (m, kappa1, kappa2, kappa3). Candidates outside the box
/// or breaking the cross-parameter constraint kappa1 <= kappa2 are rejected
/// without being evaluated.
struct SearchBox {
    std::array<double, 4> lo{1.5, 1.0, 3.0, 2.0};
    std::array<double, 4> hi{4.0, 3.0, 12.0, 8.0};
};

struct SearchConfig {
    SearchBox box;
    int budget = 2000;  ///< total objective evaluations across all starts
    std::uint64_t seed = 0;
    int starts = 16;  ///< Latin-hypercube Nelder-Mead restarts
};

struct Evaluation {
    int start_index;
    std::array<double, 4> point;  ///< (m, kappa1, kappa2, kappa3)
    double value;
};

struct OptimizeResult {
    BoundParams best_params;
    double best_value;
    std::vector<Evaluation> trace;
};

/// Multistart Nelder-Mead inside the feasibility box. Deterministic for a
/// fixed seed: starts are merged in start-index order and ties break toward
/// smaller kappa2, then smaller m. Throws window_error("infeasible box")
/// when the box does not intersect the parameter invariants.
OptimizeResult optimize(const ObjectiveSpec& objective, const SearchConfig& config);

}  // namespace pntsi
