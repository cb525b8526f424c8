#include "fairspan/mechanisms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "enum_scan.hpp"
#include "fairspan/fairness.hpp"

namespace fairspan {

namespace {

void check_chores(const Instance& inst, const char* op) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument(std::string(op) + ": chores instances only");
  }
}

// Minimizes (makespan, total cost) lexicographically for chores, or maximizes
// (minimum value, total value) for goods; keeps the lexicographically first
// assignment on full ties.
struct RefinedOptFold {
  bool goods = false;
  bool has = false;
  Rational best_primary;
  Rational best_total;
  std::vector<int> witness;

  void visit(std::uint64_t, const std::vector<int>& digits, const std::vector<Rational>& loads,
             const Rational& total) {
    const Rational& primary = goods ? *std::min_element(loads.begin(), loads.end())
                                    : *std::max_element(loads.begin(), loads.end());
    if (has && !better(primary, total)) return;
    has = true;
    best_primary = primary;
    best_total = total;
    witness = digits;
  }

  bool better(const Rational& primary, const Rational& total) const {
    if (goods) {
      return primary > best_primary || (primary == best_primary && total > best_total);
    }
    return primary < best_primary || (primary == best_primary && total < best_total);
  }

  void merge(RefinedOptFold&& other) {
    if (!other.has) return;
    if (!has || better(other.best_primary, other.best_total)) {
      has = true;
      best_primary = std::move(other.best_primary);
      best_total = std::move(other.best_total);
      witness = std::move(other.witness);
    }
  }
};

MechanismOutcome refined_optimum(const Instance& inst, std::uint64_t cap) {
  if (!normalization_factor(inst)) {
    throw std::invalid_argument("normalized mechanism requires equal row sums");
  }
  const std::uint64_t count = allocation_count_checked(inst.machines(), inst.jobs(), cap);
  RefinedOptFold fold;
  fold.goods = inst.kind() == Kind::goods;
  fold = detail::scan_all(inst, count, std::move(fold));
  Allocation alloc(inst.machines(), std::move(fold.witness));
  PaymentVector payments = proportional_payments(inst, alloc);
  return MechanismOutcome{std::move(alloc), std::move(payments),
                          MechanismSource::normalized_optimal};
}

}  // namespace

AntiDiagonalResult anti_diagonal_mechanism(const Instance& inst, const Allocation& initial) {
  check_chores(inst, "anti_diagonal_mechanism");
  check_dimensions(inst, initial);
  const int m = inst.machines();
  // bundle_costs[i*m + l] = c_i(B_l); B is fixed input throughout.
  const std::vector<Rational> bc = cross_costs(inst, initial);
  auto cost_of_bundle = [&](int machine, int bundle) -> const Rational& {
    return bc[static_cast<size_t>(machine) * m + bundle];
  };
  // antipode of machine i on the anti-diagonal selected by k (all 0-based)
  auto antipode = [m](int i, int k) { return ((k - i - 1) % m + m) % m; };

  AntiDiagonalTrace trace;
  for (int i = 0; i < m; ++i) {
    trace.initial_makespan = std::max(trace.initial_makespan, cost_of_bundle(i, i));
  }
  const Rational budget = Rational(3, 2) * trace.initial_makespan;

  int best_k = 0;
  Rational best_sum;
  for (int k = 0; k < m; ++k) {
    Rational sum;
    for (int i = 0; i < m; ++i) sum += cost_of_bundle(i, antipode(i, k));
    if (k == 0 || sum < best_sum) {
      best_k = k;
      best_sum = std::move(sum);
    }
  }
  trace.chosen_k = best_k;

  // held[i]: original bundles currently forming A_i
  std::vector<std::vector<int>> held(m);
  for (int i = 0; i < m; ++i) held[i] = {antipode(i, best_k)};
  auto load = [&](int machine, const std::vector<int>& bundles) {
    Rational sum;
    for (int b : bundles) sum += cost_of_bundle(machine, b);
    return sum;
  };

  for (int i = 0; i < m; ++i) {
    const int j = antipode(i, best_k);
    {
      Rational own_i = load(i, held[i]);
      Rational own_j = load(j, held[j]);
      Rational crossed_i = load(i, held[j]);
      Rational crossed_j = load(j, held[i]);
      if (crossed_i + crossed_j < own_i + own_j) {
        std::swap(held[i], held[j]);
        trace.swaps.emplace_back(i, j);
      }
    }
    {
      Rational own_i = load(i, held[i]);
      Rational own_j = load(j, held[j]);
      Rational take = load(i, held[j]);
      if (take < own_j && own_i + take <= budget) {
        assert(i != j);  // a self-pair never satisfies the strict inequality
        held[i].insert(held[i].end(), held[j].begin(), held[j].end());
        held[j].clear();
        trace.merges.emplace_back(i, j);
      }
    }
  }

  std::vector<int> owner_of_bundle(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int b : held[i]) owner_of_bundle[b] = i;
  }
  std::vector<int> assignment(inst.jobs());
  for (int job = 0; job < inst.jobs(); ++job) {
    assignment[job] = owner_of_bundle[initial.machine_of(job)];
  }
  Allocation alloc(m, std::move(assignment));
  PaymentVector payments = proportional_payments(inst, alloc);
  return AntiDiagonalResult{
      MechanismOutcome{std::move(alloc), std::move(payments), MechanismSource::anti_diagonal},
      std::move(trace)};
}

CyclicResult cyclic_mechanism(const Instance& inst, const Allocation& initial,
                              const Rational& eps) {
  check_chores(inst, "cyclic_mechanism");
  check_dimensions(inst, initial);
  if (eps.sign() <= 0 || eps >= Rational(1)) {
    throw std::domain_error("cyclic_mechanism: eps must satisfy 0 < eps < 1");
  }
  const int m = inst.machines();
  const Rational keep = Rational(1) - eps;
  const std::vector<Rational> bc = cross_costs(inst, initial);
  auto token_cost = [&](int machine, int token) -> const Rational& {
    return bc[static_cast<size_t>(machine) * m + token];
  };

  std::vector<int> position(m);
  for (int k = 0; k < m; ++k) position[k] = k;

  std::vector<TokenMove> moves;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < m && !moved; ++i) {
      const int pred = (i + m - 1) % m;
      for (int k = 0; k < m && !moved; ++k) {
        if (position[k] == pred && token_cost(i, k) < keep * token_cost(pred, k)) {
          position[k] = i;
          moves.push_back(TokenMove{k, pred, i});
          moved = true;  // restart the scan from the top
        }
      }
    }
  }

  std::vector<int> assignment(inst.jobs());
  for (int job = 0; job < inst.jobs(); ++job) {
    assignment[job] = position[initial.machine_of(job)];
  }
  Allocation alloc(m, std::move(assignment));
  std::vector<Rational> loads = machine_loads(inst, alloc);
  PaymentVector payments;
  payments.payments.reserve(m);
  for (int i = 0; i < m; ++i) payments.payments.push_back(keep * loads[i]);
  return CyclicResult{
      MechanismOutcome{std::move(alloc), std::move(payments), MechanismSource::cyclic},
      std::move(moves)};
}

MechanismOutcome normalized_optimal_mechanism(const Instance& inst, std::uint64_t cap) {
  check_chores(inst, "normalized_optimal_mechanism");
  return refined_optimum(inst, cap);
}

MechanismOutcome goods_normalized_optimal_mechanism(const Instance& inst, std::uint64_t cap) {
  if (inst.kind() != Kind::goods) {
    throw std::invalid_argument("goods_normalized_optimal_mechanism: goods instances only");
  }
  return refined_optimum(inst, cap);
}

}  // namespace fairspan
