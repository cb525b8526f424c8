#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fairspan/instance.hpp"
#include "fairspan/oracles.hpp"

namespace fairspan {

/// Execution record of the anti-diagonal mechanism. Indices are 0-based;
/// every recorded pair (i,j) satisfies j = (chosen_k - i - 1) mod m, the
/// 0-based form of the antipodal index.
struct AntiDiagonalTrace {
  int chosen_k = 0;
  Rational initial_makespan;  // M = max_l c_l(B_l) of the input allocation
  std::vector<std::pair<int, int>> swaps;
  std::vector<std::pair<int, int>> merges;
};

struct AntiDiagonalResult {
  MechanismOutcome outcome;
  AntiDiagonalTrace trace;
};

/// Rotates the input bundles onto the total-cost-minimizing anti-diagonal
/// (smallest k on ties), then walks the antipodal pairs in ascending order,
/// swapping when the crossed assignment is strictly cheaper and merging into
/// i when i handles j's bundle strictly cheaper and the merged load stays
/// within (3/2) * M. Payments are the proportional payments, so the outcome
/// is mean-efficient and proportional, and its makespan is at most (3/2) * M.
/// Chores only; the input allocation B is never mutated.
AntiDiagonalResult anti_diagonal_mechanism(const Instance& inst, const Allocation& initial);

struct TokenMove {
  int token;  // original bundle index
  int from;
  int to;
};

struct CyclicResult {
  MechanismOutcome outcome;
  std::vector<TokenMove> moves;
};

/// Treats the input bundles as atomic tokens. While some machine i values a
/// token held by its cyclic predecessor at strictly less than (1-eps) times
/// the holder's cost, the token moves to i; the scan runs i ascending then
/// token ascending and restarts after every move. Payments are
/// (1-eps) * c_i(A_i). The outcome is (1-eps)-cyclic-envy-free with makespan
/// at most (1/eps) * max_l c_l(B_l); every token moves fewer than m times.
CyclicResult cyclic_mechanism(const Instance& inst, const Allocation& initial,
                              const Rational& eps);

/// Exhaustively picks the allocation minimizing the makespan, then the total
/// cost, then the assignment vector lexicographically; attaches proportional
/// payments. Requires a normalized chores instance. The result attains the
/// optimal makespan exactly, is mean-efficient, and its improvement graph is
/// acyclic.
MechanismOutcome normalized_optimal_mechanism(const Instance& inst,
                                              std::uint64_t cap = kDefaultEnumCap);

/// Goods dual: maximizes the minimum value, then the total value, then
/// lexicographic; attaches proportional payments. Requires a normalized goods
/// instance. Attains the optimal egalitarian welfare exactly.
MechanismOutcome goods_normalized_optimal_mechanism(const Instance& inst,
                                                    std::uint64_t cap = kDefaultEnumCap);

}  // namespace fairspan
