#include "fairspan/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fairspan {

Instance lb_three_halves_instance(int machines, int jobs, const Rational& eps) {
  if (machines < 2 || jobs < machines) {
    throw std::invalid_argument("lb_three_halves_instance: need n >= m >= 2");
  }
  if (eps.sign() <= 0 || eps > Rational(1, 2)) {
    throw std::invalid_argument("lb_three_halves_instance: need 0 < eps <= 1/2");
  }
  const Rational above = Rational(3, 2) - eps / Rational(2);
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(machines) * jobs);
  for (int i = 0; i < machines; ++i) {
    for (int j = 0; j < jobs; ++j) {
      if (j >= machines) {
        entries.emplace_back(0);
      } else if (i == j) {
        entries.emplace_back(1);
      } else if (j < i) {
        entries.emplace_back(1, 2);
      } else {
        entries.push_back(above);
      }
    }
  }
  return Instance(Kind::chores, machines, jobs, std::move(entries));
}

Instance goods_lb_instance(int machines, int jobs) {
  if (machines < 2 || jobs < machines) {
    throw std::invalid_argument("goods_lb_instance: need n >= m >= 2");
  }
  const Rational pivot =
      Rational(machines) * Rational(machines + 1) / Rational(machines - 1);
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(machines) * jobs);
  for (int i = 0; i < machines; ++i) {
    for (int j = 0; j < jobs; ++j) {
      if (j >= machines) {
        entries.emplace_back(0);
      } else if (j == machines - 1) {
        entries.push_back(i == 0 ? Rational(1) : pivot);
      } else {
        entries.emplace_back(i == 0 ? 0 : 1);
      }
    }
  }
  return Instance(Kind::goods, machines, jobs, std::move(entries));
}

Instance random_instance(int machines, int jobs, Kind kind, std::uint64_t seed,
                         RandomFamily family, int denominator) {
  if (machines < 2 || jobs < 2) throw std::invalid_argument("random_instance: need m, n >= 2");
  if (denominator < 1) throw std::invalid_argument("random_instance: denominator must be positive");
  std::mt19937_64 rng(seed);
  // modulo draw keeps output identical across platforms
  auto draw = [&]() {
    return Rational(static_cast<long long>(rng() % (static_cast<std::uint64_t>(denominator) + 1)),
                    denominator);
  };
  std::vector<Rational> entries(static_cast<size_t>(machines) * jobs);
  for (int i = 0; i < machines; ++i) {
    for (;;) {
      Rational row_sum;
      for (int j = 0; j < jobs; ++j) {
        entries[static_cast<size_t>(i) * jobs + j] = draw();
        row_sum += entries[static_cast<size_t>(i) * jobs + j];
      }
      if (family == RandomFamily::uniform_unit) break;
      if (row_sum.is_zero()) continue;  // zero rows cannot be rescaled; redraw
      for (int j = 0; j < jobs; ++j) entries[static_cast<size_t>(i) * jobs + j] /= row_sum;
      break;
    }
  }
  return Instance(kind, machines, jobs, std::move(entries));
}

ReductionResult reduce_to_normalized(const Instance& inst, const Rational& beta,
                                     std::uint64_t cap) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument("reduce_to_normalized: chores instances only");
  }
  if (beta < Rational(1)) throw std::invalid_argument("reduce_to_normalized: beta must be >= 1");
  const int m = inst.machines();
  const int n = inst.jobs();
  const Rational opt = brute_force_opt(inst, cap).value;

  Rational max_row_sum = inst.row_sum(0);
  for (int i = 1; i < m; ++i) max_row_sum = std::max(max_row_sum, inst.row_sum(i));

  // eta is half the largest value satisfying both strict constraints; a
  // constraint with a zero coefficient holds for every eta and drops out.
  std::optional<Rational> bound;
  const Rational first_coeff = beta * opt + max_row_sum;
  if (first_coeff.sign() > 0) bound = Rational(1) / first_coeff;
  if (opt.sign() > 0) {
    Rational second = Rational(1) / (Rational(n) * beta * opt);
    bound = bound ? std::min(*bound, second) : second;
  }
  const Rational eta = bound ? *bound / Rational(2) : Rational(1, 2);

  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(m + 1) * (n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(eta * inst.cost(i, j));
    entries.push_back(Rational(1) - eta * inst.row_sum(i));
  }
  for (int j = 0; j < n; ++j) entries.emplace_back(1, n);
  entries.emplace_back(0);
  return ReductionResult{Instance(Kind::chores, m + 1, n + 1, std::move(entries)), eta, beta};
}

std::pair<Allocation, PaymentVector> map_back(const ReductionResult& reduction,
                                              const Allocation& reduced_alloc,
                                              const PaymentVector& reduced_payments) {
  const Instance& reduced = reduction.reduced;
  check_dimensions(reduced, reduced_alloc);
  check_dimensions(reduced, reduced_payments);
  const int m = reduced.machines() - 1;
  const int n = reduced.jobs() - 1;
  if (reduced_alloc.machine_of(n) != m) {
    throw std::invalid_argument("map_back: filler job must sit on the filler machine");
  }
  std::vector<int> assignment(n);
  for (int j = 0; j < n; ++j) {
    assignment[j] = reduced_alloc.machine_of(j);
    if (assignment[j] >= m) {
      throw std::invalid_argument("map_back: original job assigned to the filler machine");
    }
  }
  PaymentVector payments;
  payments.payments.reserve(m);
  for (int i = 0; i < m; ++i) {
    payments.payments.push_back(reduced_payments.payments[i] / reduction.eta);
  }
  return {Allocation(m, std::move(assignment)), std::move(payments)};
}

}  // namespace fairspan
