#include "fairspan/oracles.hpp"

#include <algorithm>

#include "enum_scan.hpp"
#include "fairspan/fairness.hpp"

namespace fairspan {

namespace {

std::uint64_t saturated_pow(int base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > UINT64_MAX / static_cast<std::uint64_t>(base)) return UINT64_MAX;
    result *= static_cast<std::uint64_t>(base);
  }
  return result;
}

const Rational& max_load(const std::vector<Rational>& loads) {
  return *std::max_element(loads.begin(), loads.end());
}

const Rational& min_load(const std::vector<Rational>& loads) {
  return *std::min_element(loads.begin(), loads.end());
}

// Minimizes the makespan (chores) or maximizes the minimum load (goods);
// keeps the lexicographically first witness on ties.
struct OptFold {
  bool goods = false;
  std::optional<Rational> best;
  std::vector<int> witness;

  void visit(std::uint64_t, const std::vector<int>& digits, const std::vector<Rational>& loads,
             const Rational&) {
    const Rational& candidate = goods ? min_load(loads) : max_load(loads);
    if (!best || (goods ? candidate > *best : candidate < *best)) {
      best = candidate;
      witness = digits;
    }
  }

  void merge(OptFold&& other) {
    if (!other.best) return;
    if (!best || (goods ? *other.best > *best : *other.best < *best)) {
      best = std::move(other.best);
      witness = std::move(other.witness);
    }
  }
};

// Best makespan/welfare restricted to mean-efficient allocations.
struct BestProportionableFold {
  bool goods = false;
  Rational threshold;  // (1/m) * sum of row sums
  std::optional<Rational> best;

  void visit(std::uint64_t, const std::vector<int>&, const std::vector<Rational>& loads,
             const Rational& total) {
    if (goods ? total < threshold : total > threshold) return;
    const Rational& candidate = goods ? min_load(loads) : max_load(loads);
    if (!best || (goods ? candidate > *best : candidate < *best)) best = candidate;
  }

  void merge(BestProportionableFold&& other) {
    if (!other.best) return;
    if (!best || (goods ? *other.best > *best : *other.best < *best)) best = std::move(other.best);
  }
};

}  // namespace

CapExceeded::CapExceeded(std::uint64_t required_, std::uint64_t cap_)
    : std::runtime_error("enumeration cap exceeded: " + std::to_string(required_) +
                         " allocations > cap " + std::to_string(cap_)),
      required(required_),
      cap(cap_) {}

std::uint64_t allocation_count_checked(int machines, int jobs, std::uint64_t cap) {
  if (machines < 1 || jobs < 1) throw std::invalid_argument("allocation_count_checked: bad dimensions");
  std::uint64_t count = 1;
  for (int j = 0; j < jobs; ++j) {
    if (count > cap / static_cast<std::uint64_t>(machines)) {
      throw CapExceeded(saturated_pow(machines, jobs), cap);
    }
    count *= static_cast<std::uint64_t>(machines);
  }
  if (count > cap) throw CapExceeded(count, cap);
  return count;
}

AllocationEnumerator::AllocationEnumerator(int machines, int jobs, std::uint64_t cap)
    : machines_(machines),
      jobs_(jobs),
      total_(allocation_count_checked(machines, jobs, cap)),
      digits_(jobs, 0) {}

std::optional<Allocation> AllocationEnumerator::next() {
  if (index_ == total_) return std::nullopt;
  Allocation out(machines_, digits_);
  ++index_;
  if (index_ != total_) {
    for (int j = jobs_ - 1; j >= 0; --j) {
      if (++digits_[j] < machines_) break;
      digits_[j] = 0;
    }
  }
  return out;
}

OptResult brute_force_opt(const Instance& inst, std::uint64_t cap) {
  const std::uint64_t count = allocation_count_checked(inst.machines(), inst.jobs(), cap);
  OptFold fold{inst.kind() == Kind::goods, std::nullopt, {}};
  fold = detail::scan_all(inst, count, std::move(fold));
  return OptResult{*fold.best, Allocation(inst.machines(), std::move(fold.witness)), count};
}

OptResult brute_force_opt_serial(const Instance& inst, std::uint64_t cap) {
  AllocationEnumerator enumerate(inst.machines(), inst.jobs(), cap);
  const bool goods = inst.kind() == Kind::goods;
  std::optional<Rational> best;
  std::optional<Allocation> witness;
  while (auto alloc = enumerate.next()) {
    std::vector<Rational> loads = machine_loads(inst, *alloc);
    Rational candidate = goods ? min_load(loads) : max_load(loads);
    if (!best || (goods ? candidate > *best : candidate < *best)) {
      best = std::move(candidate);
      witness = std::move(*alloc);
    }
  }
  return OptResult{*best, std::move(*witness), enumerate.total()};
}

std::optional<Rational> best_proportionable_makespan(const Instance& inst, std::uint64_t cap) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument("best_proportionable_makespan: chores instances only");
  }
  const std::uint64_t count = allocation_count_checked(inst.machines(), inst.jobs(), cap);
  BestProportionableFold fold{false, mean_efficiency_threshold(inst), std::nullopt};
  fold = detail::scan_all(inst, count, std::move(fold));
  return fold.best;
}

std::optional<Rational> best_proportionable_makespan_serial(const Instance& inst,
                                                            std::uint64_t cap) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument("best_proportionable_makespan: chores instances only");
  }
  AllocationEnumerator enumerate(inst.machines(), inst.jobs(), cap);
  std::optional<Rational> best;
  while (auto alloc = enumerate.next()) {
    if (!is_mean_efficient(inst, *alloc)) continue;
    Rational candidate = makespan(inst, *alloc);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return best;
}

std::optional<Rational> best_proportionable_welfare(const Instance& inst, std::uint64_t cap) {
  if (inst.kind() != Kind::goods) {
    throw std::invalid_argument("best_proportionable_welfare: goods instances only");
  }
  const std::uint64_t count = allocation_count_checked(inst.machines(), inst.jobs(), cap);
  BestProportionableFold fold{true, mean_efficiency_threshold(inst), std::nullopt};
  fold = detail::scan_all(inst, count, std::move(fold));
  return fold.best;
}

std::optional<Rational> best_proportionable_welfare_serial(const Instance& inst,
                                                           std::uint64_t cap) {
  if (inst.kind() != Kind::goods) {
    throw std::invalid_argument("best_proportionable_welfare: goods instances only");
  }
  AllocationEnumerator enumerate(inst.machines(), inst.jobs(), cap);
  std::optional<Rational> best;
  while (auto alloc = enumerate.next()) {
    if (!is_mean_efficient(inst, *alloc)) continue;
    std::vector<Rational> loads = machine_loads(inst, *alloc);
    Rational candidate = min_load(loads);
    if (!best || candidate > *best) best = std::move(candidate);
  }
  return best;
}

EnumerationReport make_enumeration_report(const Instance& inst, std::uint64_t cap) {
  OptResult opt = brute_force_opt(inst, cap);
  std::optional<Rational> best = inst.kind() == Kind::chores
                                     ? best_proportionable_makespan(inst, cap)
                                     : best_proportionable_welfare(inst, cap);
  return EnumerationReport{inst, std::move(opt.value), std::move(best), opt.enumerated};
}

}  // namespace fairspan
