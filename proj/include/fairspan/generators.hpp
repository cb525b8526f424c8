#pragma once

#include <cstdint>
#include <utility>

#include "fairspan/instance.hpp"
#include "fairspan/oracles.hpp"

namespace fairspan {

/// The 3/2 lower-bound family: ones on the diagonal, 1/2 below it,
/// 3/2 - eps/2 above it (within the first m columns), zeros in columns
/// m+1..n. Requires n >= m >= 2 and 0 < eps <= 1/2. The optimal makespan is
/// 1, while no mean-efficient allocation reaches makespan 3/2 - eps.
Instance lb_three_halves_instance(int machines, int jobs, const Rational& eps);

/// Goods family with no proportional approximation: agent 1 values only good
/// m (at 1); every other agent values goods 1..m-1 at 1 and good m at
/// m(m+1)/(m-1); goods beyond m are worthless. Requires n >= m >= 2.
Instance goods_lb_instance(int machines, int jobs);

enum class RandomFamily {
  uniform_unit,        // entries k/D with k uniform in [0, D]
  normalized_uniform,  // uniform rows rescaled exactly to sum 1
};

/// Deterministic in the seed: the same arguments always produce the same
/// matrix.
Instance random_instance(int machines, int jobs, Kind kind, std::uint64_t seed,
                         RandomFamily family, int denominator = 1000);

/// General -> normalized reduction. The reduced instance has one extra
/// machine and one extra job, every row sums to exactly 1, and eta satisfies
/// eta * (beta*OPT + max_i c_i([n])) < 1 and eta * beta * OPT < 1/n strictly.
struct ReductionResult {
  Instance reduced;
  Rational eta;
  Rational beta;
};

/// Scales the instance by eta (half the largest admissible value), appends a
/// filler job restoring each row to sum 1, and a filler machine that charges
/// 1/n per original job and 0 for the filler job. Needs OPT, so the
/// enumeration cap applies.
ReductionResult reduce_to_normalized(const Instance& inst, const Rational& beta,
                                     std::uint64_t cap = kDefaultEnumCap);

/// Restriction of a reduced-instance outcome to the original machines, with
/// payments scaled by 1/eta. Requires the canonical shape: the filler job on
/// the filler machine and all original jobs on original machines.
std::pair<Allocation, PaymentVector> map_back(const ReductionResult& reduction,
                                              const Allocation& reduced_alloc,
                                              const PaymentVector& reduced_payments);

}  // namespace fairspan
