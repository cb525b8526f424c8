#pragma once

// Internal allocation-space scan kernel shared by the enumeration oracles and
// the exhaustive mechanisms. Not installed; include from src/ only.

#include <cstdint>
#include <utility>
#include <vector>

#include "fairspan/instance.hpp"

namespace fairspan::detail {

// Walks assignment vectors for indices [begin, end) in ascending order.
// Index encoding is base-m with job 0 as the most significant digit, so
// ascending index order is lexicographic order on assignment vectors.
// Loads and the running total are maintained incrementally; the visitor is
// called once per allocation.
template <class Visit>
void scan_range(const Instance& inst, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const int m = inst.machines();
  const int n = inst.jobs();

  std::vector<int> digits(n, 0);
  std::uint64_t rest = begin;
  for (int j = n - 1; j >= 0; --j) {
    digits[j] = static_cast<int>(rest % m);
    rest /= m;
  }

  std::vector<Rational> loads(m);
  Rational total;
  for (int j = 0; j < n; ++j) {
    loads[digits[j]] += inst.cost(digits[j], j);
    total += inst.cost(digits[j], j);
  }

  for (std::uint64_t index = begin;; ++index) {
    visit(index, digits, loads, total);
    if (index + 1 == end) break;
    // odometer step: last job cycles fastest
    int j = n - 1;
    for (;;) {
      const int old_machine = digits[j];
      loads[old_machine] -= inst.cost(old_machine, j);
      total -= inst.cost(old_machine, j);
      if (old_machine + 1 < m) {
        digits[j] = old_machine + 1;
        loads[digits[j]] += inst.cost(digits[j], j);
        total += inst.cost(digits[j], j);
        break;
      }
      digits[j] = 0;
      loads[0] += inst.cost(0, j);
      total += inst.cost(0, j);
      --j;
    }
  }
}

// Fold must provide visit(index, digits, loads, total) and merge(Fold&&),
// where merge is applied in ascending block order. Ties must keep the
// earlier candidate so the result is identical to a single serial scan
// regardless of thread count.
template <class Fold>
Fold scan_all(const Instance& inst, std::uint64_t count, Fold fold) {
  constexpr int kBlocks = 64;
  const int blocks = static_cast<int>(count < kBlocks ? count : kBlocks);
  if (blocks <= 1) {
    scan_range(inst, 0, count, [&](auto&&... args) { fold.visit(args...); });
    return fold;
  }

  std::vector<Fold> partial(blocks, fold);
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < blocks; ++b) {
    const std::uint64_t lo = count / blocks * b + std::min<std::uint64_t>(b, count % blocks);
    const std::uint64_t hi = count / blocks * (b + 1) + std::min<std::uint64_t>(b + 1, count % blocks);
    scan_range(inst, lo, hi, [&](auto&&... args) { partial[b].visit(args...); });
  }
  for (int b = 0; b < blocks; ++b) fold.merge(std::move(partial[b]));
  return fold;
}

}  // namespace fairspan::detail
