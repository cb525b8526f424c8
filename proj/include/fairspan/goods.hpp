#pragma once

#include "fairspan/instance.hpp"

namespace fairspan {

/// min_i v_i(A_i): the smallest value any agent derives. Goods only.
Rational egalitarian_welfare(const Instance& inst, const Allocation& alloc);

/// v_i(A_i) - q_i >= (1/m) * Sum_j (v_i(A_j) - q_j) for every agent. Goods
/// only; implemented directly with the reversed inequality rather than by
/// negating the matrix, so entries stay nonnegative.
bool goods_proportional_check(const Instance& inst, const Allocation& alloc,
                              const PaymentVector& transfers);

struct WelfareReport {
  Rational egalitarian_welfare;
  Allocation allocation;
  bool proportionable = false;  // goods mean efficiency
};

WelfareReport make_welfare_report(const Instance& inst, const Allocation& alloc);

}  // namespace fairspan
