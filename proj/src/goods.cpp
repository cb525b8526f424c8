#include "fairspan/goods.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairspan/fairness.hpp"

namespace fairspan {

namespace {

void check_goods(const Instance& inst, const char* op) {
  if (inst.kind() != Kind::goods) {
    throw std::invalid_argument(std::string(op) + ": goods instances only");
  }
}

}  // namespace

Rational egalitarian_welfare(const Instance& inst, const Allocation& alloc) {
  check_goods(inst, "egalitarian_welfare");
  std::vector<Rational> loads = machine_loads(inst, alloc);
  return *std::min_element(loads.begin(), loads.end());
}

bool goods_proportional_check(const Instance& inst, const Allocation& alloc,
                              const PaymentVector& transfers) {
  check_goods(inst, "goods_proportional_check");
  return is_proportional(inst, alloc, transfers);
}

WelfareReport make_welfare_report(const Instance& inst, const Allocation& alloc) {
  return WelfareReport{egalitarian_welfare(inst, alloc), alloc, is_mean_efficient(inst, alloc)};
}

}  // namespace fairspan
