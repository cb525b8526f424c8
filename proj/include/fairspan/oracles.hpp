#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fairspan/instance.hpp"

namespace fairspan {

/// Default limit on the number of enumerated allocations (m^n). The CLI can
/// override it through the FAIRSPAN_ENUM_CAP environment variable.
inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Thrown when an exhaustive computation would enumerate more than the
/// configured cap of allocations.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap);
  std::uint64_t required;
  std::uint64_t cap;
};

/// m^n after checking it against the cap; throws CapExceeded otherwise.
std::uint64_t allocation_count_checked(int machines, int jobs, std::uint64_t cap);

/// Streams all m^n allocations exactly once, in lexicographic order of the
/// assignment vector: (1,1), (1,2), ..., (m,m) for m = n = 2.
class AllocationEnumerator {
 public:
  AllocationEnumerator(int machines, int jobs, std::uint64_t cap = kDefaultEnumCap);

  std::optional<Allocation> next();
  std::uint64_t total() const { return total_; }

 private:
  int machines_;
  int jobs_;
  std::uint64_t total_;
  std::uint64_t index_ = 0;
  std::vector<int> digits_;
};

struct OptResult {
  /// Chores: the optimal makespan. Goods: the optimal egalitarian welfare.
  Rational value;
  /// Lexicographically smallest witnessing allocation.
  Allocation witness;
  std::uint64_t enumerated = 0;
};

/// Exhaustive optimum over all allocations. The OpenMP kernel partitions the
/// assignment space into fixed blocks and merges block results in ascending
/// order, so the answer is identical to the serial reference for any thread
/// count.
OptResult brute_force_opt(const Instance& inst, std::uint64_t cap = kDefaultEnumCap);

/// Serial reference: evaluates every allocation from scratch through the
/// public enumerator. Kept for cross-checking the incremental kernel.
OptResult brute_force_opt_serial(const Instance& inst, std::uint64_t cap = kDefaultEnumCap);

/// Minimum makespan over mean-efficient allocations (chores). A mean-efficient
/// allocation always exists, so none signals an internal error.
std::optional<Rational> best_proportionable_makespan(const Instance& inst,
                                                     std::uint64_t cap = kDefaultEnumCap);
std::optional<Rational> best_proportionable_makespan_serial(const Instance& inst,
                                                            std::uint64_t cap = kDefaultEnumCap);

/// Maximum egalitarian welfare over mean-efficient allocations (goods).
std::optional<Rational> best_proportionable_welfare(const Instance& inst,
                                                    std::uint64_t cap = kDefaultEnumCap);
std::optional<Rational> best_proportionable_welfare_serial(const Instance& inst,
                                                           std::uint64_t cap = kDefaultEnumCap);

struct EnumerationReport {
  Instance instance;
  /// OPT makespan (chores) or OPT egalitarian welfare (goods).
  Rational opt;
  /// Best makespan/welfare among mean-efficient allocations.
  std::optional<Rational> best_proportionable;
  std::uint64_t count_enumerated = 0;
};

EnumerationReport make_enumeration_report(const Instance& inst,
                                          std::uint64_t cap = kDefaultEnumCap);

}  // namespace fairspan
