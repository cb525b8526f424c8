#include "fairspan/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairspan {

Instance::Instance(Kind kind, int machines, int jobs, std::vector<Rational> entries)
    : kind_(kind), machines_(machines), jobs_(jobs), entries_(std::move(entries)) {
  if (machines_ < 2) throw std::invalid_argument("Instance: need at least two machines");
  if (jobs_ < 2) throw std::invalid_argument("Instance: need at least two jobs");
  if (entries_.size() != static_cast<size_t>(machines_) * static_cast<size_t>(jobs_)) {
    throw std::invalid_argument("Instance: entry count does not match dimensions");
  }
  for (const Rational& e : entries_) {
    if (e.sign() < 0) throw std::invalid_argument("Instance: entries must be nonnegative");
  }
  row_sums_.reserve(machines_);
  for (int i = 0; i < machines_; ++i) {
    Rational sum;
    for (int j = 0; j < jobs_; ++j) sum += entries_[static_cast<size_t>(i) * jobs_ + j];
    row_sums_.push_back(std::move(sum));
  }
}

Instance Instance::from_rows(Kind kind, const std::vector<std::vector<Rational>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(m) * static_cast<size_t>(std::max(n, 0)));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("Instance::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Instance(kind, m, n, std::move(entries));
}

const Rational& Instance::cost(int machine, int job) const {
  if (machine < 0 || machine >= machines_) throw std::out_of_range("Instance::cost: machine index");
  if (job < 0 || job >= jobs_) throw std::out_of_range("Instance::cost: job index");
  return entries_[static_cast<size_t>(machine) * jobs_ + job];
}

const Rational& Instance::row_sum(int machine) const {
  if (machine < 0 || machine >= machines_) throw std::out_of_range("Instance::row_sum: machine index");
  return row_sums_[machine];
}

Allocation::Allocation(int machine_count, std::vector<int> assignment)
    : machine_count_(machine_count), assignment_(std::move(assignment)) {
  if (machine_count_ < 1) throw std::invalid_argument("Allocation: machine count must be positive");
  for (int machine : assignment_) {
    if (machine < 0 || machine >= machine_count_) {
      throw std::invalid_argument("Allocation: job assigned to machine out of range");
    }
  }
}

std::vector<int> Allocation::bundle(int machine) const {
  std::vector<int> jobs;
  for (int j = 0; j < job_count(); ++j) {
    if (assignment_[j] == machine) jobs.push_back(j);
  }
  return jobs;
}

std::vector<std::vector<int>> Allocation::bundles() const {
  std::vector<std::vector<int>> out(machine_count_);
  for (int j = 0; j < job_count(); ++j) out[assignment_[j]].push_back(j);
  return out;
}

void check_dimensions(const Instance& inst, const Allocation& alloc) {
  if (alloc.machine_count() != inst.machines() || alloc.job_count() != inst.jobs()) {
    throw std::invalid_argument("allocation dimensions do not match instance");
  }
}

void check_dimensions(const Instance& inst, const PaymentVector& payments) {
  if (static_cast<int>(payments.payments.size()) != inst.machines()) {
    throw std::invalid_argument("payment vector length does not match machine count");
  }
}

Rational bundle_cost(const Instance& inst, int machine, std::span<const int> jobs) {
  Rational sum;
  for (int job : jobs) sum += inst.cost(machine, job);
  return sum;
}

std::vector<Rational> machine_loads(const Instance& inst, const Allocation& alloc) {
  check_dimensions(inst, alloc);
  std::vector<Rational> loads(inst.machines());
  for (int j = 0; j < inst.jobs(); ++j) {
    loads[alloc.machine_of(j)] += inst.cost(alloc.machine_of(j), j);
  }
  return loads;
}

std::vector<Rational> cross_costs(const Instance& inst, const Allocation& alloc) {
  check_dimensions(inst, alloc);
  const int m = inst.machines();
  std::vector<Rational> table(static_cast<size_t>(m) * m);
  for (int j = 0; j < inst.jobs(); ++j) {
    const int owner = alloc.machine_of(j);
    for (int i = 0; i < m; ++i) {
      table[static_cast<size_t>(i) * m + owner] += inst.cost(i, j);
    }
  }
  return table;
}

Rational makespan(const Instance& inst, const Allocation& alloc) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument("makespan is defined for chores; use egalitarian_welfare for goods");
  }
  std::vector<Rational> loads = machine_loads(inst, alloc);
  return *std::max_element(loads.begin(), loads.end());
}

Rational total_cost(const Instance& inst, const Allocation& alloc) {
  std::vector<Rational> loads = machine_loads(inst, alloc);
  Rational sum;
  for (const Rational& load : loads) sum += load;
  return sum;
}

std::optional<Rational> normalization_factor(const Instance& inst) {
  const Rational& first = inst.row_sum(0);
  for (int i = 1; i < inst.machines(); ++i) {
    if (inst.row_sum(i) != first) return std::nullopt;
  }
  return first;
}

Rational mean_efficiency_threshold(const Instance& inst) {
  Rational sum;
  for (int i = 0; i < inst.machines(); ++i) sum += inst.row_sum(i);
  return sum / Rational(inst.machines());
}

}  // namespace fairspan
