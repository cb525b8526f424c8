#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairspan/instance.hpp"

namespace fairspan {

/// Complete weighted digraph on machines with w(i,j) = alpha*c_i(A_i) - c_i(A_j).
/// The diagonal holds (alpha-1)*c_i(A_i), which is zero when alpha = 1.
struct EnvyGraph {
  int size = 0;
  std::vector<Rational> weights;  // row-major size x size

  const Rational& weight(int i, int j) const { return weights[static_cast<size_t>(i) * size + j]; }
};

EnvyGraph make_envy_graph(const Instance& inst, const Allocation& alloc, const Rational& alpha);

/// Directed edge (i,j) whenever machine j handles bundle A_i strictly cheaper
/// than its owner: c_j(A_i) < c_i(A_i). No self-loops.
struct ImprovementGraph {
  int size = 0;
  std::vector<std::pair<int, int>> edges;
};

ImprovementGraph make_improvement_graph(const Instance& inst, const Allocation& alloc);
bool is_acyclic(const ImprovementGraph& graph);

/// Chores: Sum_i c_i(A_i) <= (1/m) * Sum_i c_i([n]). Goods: reversed (>=).
bool is_mean_efficient(const Instance& inst, const Allocation& alloc);

/// p_i = c_i(A_i) - (1/m) * c_i([n]); the same formula serves goods (with
/// values in place of costs).
PaymentVector proportional_payments(const Instance& inst, const Allocation& alloc);

/// Chores: c_i(A_i) - p_i <= (1/m) * Sum_j (c_i(A_j) - p_j) for every machine.
/// Goods: reversed inequality.
bool is_proportional(const Instance& inst, const Allocation& alloc, const PaymentVector& payments);

/// alpha*c_i(A_i) - p_i <= c_i(A_j) - p_j for all ordered pairs i != j.
/// Requires 0 < alpha <= 1; alpha = 1 is exact envy-freeness. Chores only.
bool is_alpha_envy_free(const Instance& inst, const Allocation& alloc,
                        const PaymentVector& payments, const Rational& alpha);

/// Envy comparison against the cyclic predecessor only (machine 1 compares
/// against machine m). A strict subset of the all-pairs constraints.
bool is_cyclic_envy_free(const Instance& inst, const Allocation& alloc,
                         const PaymentVector& payments, const Rational& alpha);

/// True iff the envy graph has no directed cycle of positive total weight,
/// detected by longest-path relaxation. Uses the subset-permutation form of
/// local efficiency uniformly; at alpha = 1 this coincides with the
/// full-permutation form (the complement maps by the identity).
bool is_alpha_locally_efficient(const Instance& inst, const Allocation& alloc,
                                const Rational& alpha);

/// Literal quantifier over all subsets S of machines and all permutations of
/// S: alpha * Sum_{i in S} c_i(A_i) <= Sum_{i in S} c_i(A_pi(i)). Exponential;
/// serves as the oracle for is_alpha_locally_efficient.
bool local_efficiency_bruteforce(const Instance& inst, const Allocation& alloc,
                                 const Rational& alpha, int machine_cap = 8);

struct HeaviestPathResult {
  /// Set iff the envy graph has no positive-weight cycle. The empty path is
  /// admissible, so payments are nonnegative.
  std::optional<PaymentVector> payments;
  /// When payments are absent: a violating cycle as a closed vertex walk
  /// v0, v1, ..., v0 rotated to start at its smallest vertex.
  std::vector<int> positive_cycle;
};

/// p_i = weight of the heaviest simple path starting at i in the envy graph.
/// On success the pair (alloc, payments) passes is_alpha_envy_free.
HeaviestPathResult heaviest_path_payments(const Instance& inst, const Allocation& alloc,
                                          const Rational& alpha);

}  // namespace fairspan
