#ifndef RECTSYZ_KOSZUL_HPP
#define RECTSYZ_KOSZUL_HPP

#include <stdexcept>
#include <string>

#include "rectsyz/graded_ideal.hpp"
#include "rectsyz/rep_ring.hpp"

namespace rectsyz {

struct KoszulOptions {
    /// Largest rows x cols product a single elimination may be asked to do.
    long long cell_budget = 50'000'000;
    /// Worker threads for the weight-block map; 0 = hardware concurrency.
    int threads = 0;
};

/// Thrown instead of attempting an elimination beyond the cell budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(long long cells, long long budget)
        : std::runtime_error("matrix of " + std::to_string(cells) +
                             " cells exceeds the cell budget of " + std::to_string(budget)),
          cells(cells),
          budget(budget) {}
    long long cells;
    long long budget;
};

/// B_{i,j} = dim Tor_i(I, C)_j, as the middle homology of
///   Λ^{i+1}V ⊗ I_{j-i-1} -> Λ^i V ⊗ I_{j-i} -> Λ^{i-1}V ⊗ I_{j-i+1},
/// computed blockwise per torus weight with exact integer ranks.
/// Out-of-range (i, j) give 0.
long long koszul_betti(ThickeningIdeal& ideal, int i, int j, const KoszulOptions& opts = {});

/// Dimension of the weight-wv block of the homology at (i, j). The weight
/// entries must sum to j on both sides.
long long weight_refined_betti(ThickeningIdeal& ideal, int i, int j, const WeightVector& wv,
                               const KoszulOptions& opts = {});

/// Every B_{i,j} with i <= max_i, j <= max_j.
BettiTable koszul_betti_table(ThickeningIdeal& ideal, int max_i, int max_j,
                              const KoszulOptions& opts = {});

/// Graded Euler-characteristic consequence of the strand-complex homology:
/// for every d <= dmax, the alternating sum of the strand term dimensions in
/// degree d equals the alternating sum over the homology summands of their
/// Hilbert functions at d.
bool euler_check(int r, int s, int m, int n, int dmax);

}  // namespace rectsyz

#endif
