#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fairspan/rational.hpp"

namespace fairspan {

/// Chores carry costs to be minimized; goods carry values to be maximized.
enum class Kind { chores, goods };

/// An m-by-n matrix of exact nonnegative rationals: costs for chores,
/// values for goods. Requires m >= 2 machines and n >= 2 jobs.
class Instance {
 public:
  Instance(Kind kind, int machines, int jobs, std::vector<Rational> entries);
  static Instance from_rows(Kind kind, const std::vector<std::vector<Rational>>& rows);

  Kind kind() const { return kind_; }
  int machines() const { return machines_; }
  int jobs() const { return jobs_; }

  const Rational& cost(int machine, int job) const;
  /// c_i([n]): total cost of machine i over all jobs (cached).
  const Rational& row_sum(int machine) const;

  bool operator==(const Instance& other) const = default;

 private:
  Kind kind_;
  int machines_;
  int jobs_;
  std::vector<Rational> entries_;  // row-major
  std::vector<Rational> row_sums_;
};

/// Maps each job to exactly one machine (0-based internally; user-facing I/O
/// is 1-based). Empty bundles are allowed.
class Allocation {
 public:
  Allocation(int machine_count, std::vector<int> assignment);

  int machine_count() const { return machine_count_; }
  int job_count() const { return static_cast<int>(assignment_.size()); }
  int machine_of(int job) const { return assignment_.at(job); }
  const std::vector<int>& assignment() const { return assignment_; }

  /// Jobs assigned to machine i, ascending.
  std::vector<int> bundle(int machine) const;
  std::vector<std::vector<int>> bundles() const;

  bool operator==(const Allocation& other) const = default;

 private:
  int machine_count_;
  std::vector<int> assignment_;
};

struct PaymentVector {
  std::vector<Rational> payments;

  bool operator==(const PaymentVector& other) const = default;
};

enum class MechanismSource { anti_diagonal, cyclic, normalized_optimal, external };

/// An allocation together with the payments that make it fair, plus the
/// provenance of which mechanism produced it.
struct MechanismOutcome {
  Allocation allocation;
  PaymentVector payments;
  MechanismSource source = MechanismSource::external;
};

/// Throws std::invalid_argument unless the allocation matches the instance
/// dimensions.
void check_dimensions(const Instance& inst, const Allocation& alloc);
void check_dimensions(const Instance& inst, const PaymentVector& payments);

/// Sum of the machine's entries over the given job set; 0 for the empty set.
Rational bundle_cost(const Instance& inst, int machine, std::span<const int> jobs);

/// Per-machine totals c_i(A_i) for all machines in one pass.
std::vector<Rational> machine_loads(const Instance& inst, const Allocation& alloc);

/// Cross-cost table X[i][j] = c_i(A_j), row-major m-by-m.
std::vector<Rational> cross_costs(const Instance& inst, const Allocation& alloc);

/// max_i c_i(A_i). Chores only; goods instances use egalitarian_welfare.
Rational makespan(const Instance& inst, const Allocation& alloc);

/// Sum_i c_i(A_i).
Rational total_cost(const Instance& inst, const Allocation& alloc);

/// The common row sum C when all rows sum to the same value, otherwise none.
std::optional<Rational> normalization_factor(const Instance& inst);

/// (1/m) * Sum_i c_i([n]): the threshold in the mean-efficiency test.
Rational mean_efficiency_threshold(const Instance& inst);

}  // namespace fairspan
