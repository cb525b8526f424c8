#include "fairspan/fairness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairspan {

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) {
    throw std::domain_error("alpha must satisfy 0 < alpha <= 1");
  }
}

void check_chores(const Instance& inst, const char* op) {
  if (inst.kind() != Kind::chores) {
    throw std::invalid_argument(std::string(op) + ": chores instances only");
  }
}

// Longest-path relaxation state over an envy graph. dist[i] is the weight of
// the heaviest walk found so far that starts at i; the empty walk (weight 0)
// is always admissible.
struct LongestPaths {
  bool positive_cycle = false;
  std::vector<Rational> dist;
  std::vector<int> cycle;  // closed walk, only when positive_cycle
};

LongestPaths longest_paths(const EnvyGraph& g) {
  const int m = g.size;
  LongestPaths out;
  out.dist.assign(m, Rational());
  std::vector<int> succ(m, -1);

  auto relax_round = [&](std::vector<char>* changed_marks) {
    bool changed = false;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        Rational candidate = g.weight(i, j) + out.dist[j];
        if (candidate > out.dist[i]) {
          out.dist[i] = std::move(candidate);
          succ[i] = j;
          changed = true;
          if (changed_marks) (*changed_marks)[i] = 1;
        }
      }
    }
    return changed;
  };

  // Simple paths have at most m-1 arcs, so a round with no change is a fixed
  // point. If all m rounds changed something, the violation scan decides
  // between a late fixed point and a positive cycle.
  bool changed = true;
  for (int round = 0; round < m && changed; ++round) changed = relax_round(nullptr);
  if (!changed) return out;

  bool violation = false;
  for (int i = 0; i < m && !violation; ++i) {
    for (int j = 0; j < m && !violation; ++j) {
      if (j != i && out.dist[i] < g.weight(i, j) + out.dist[j]) violation = true;
    }
  }
  if (!violation) return out;

  out.positive_cycle = true;

  // Witness extraction: m more rounds so the successor chain of any vertex
  // still improving in the last round leads into a cycle within m hops.
  std::vector<char> marks(m, 0);
  for (int round = 0; round < m; ++round) {
    std::fill(marks.begin(), marks.end(), 0);
    relax_round(&marks);
  }
  int v = -1;
  for (int i = 0; i < m; ++i) {
    if (marks[i]) { v = i; break; }
  }
  if (v < 0) throw std::logic_error("positive cycle detected but no vertex improved");
  for (int step = 0; step < m; ++step) {
    if (succ[v] < 0) throw std::logic_error("positive cycle walk left the successor graph");
    v = succ[v];
  }
  std::vector<char> seen(m, 0);
  std::vector<int> walk;
  int u = v;
  while (!seen[u]) {
    seen[u] = 1;
    walk.push_back(u);
    u = succ[u];
  }
  auto entry = std::find(walk.begin(), walk.end(), u);
  std::vector<int> cycle(entry, walk.end());
  // canonical rotation: smallest vertex first, then close the walk
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  cycle.push_back(cycle.front());

  Rational weight;
  for (size_t t = 0; t + 1 < cycle.size(); ++t) weight += g.weight(cycle[t], cycle[t + 1]);
  if (weight.sign() <= 0) throw std::logic_error("extracted cycle is not positive");
  out.cycle = std::move(cycle);
  return out;
}

}  // namespace

EnvyGraph make_envy_graph(const Instance& inst, const Allocation& alloc, const Rational& alpha) {
  check_alpha(alpha);
  check_dimensions(inst, alloc);
  const int m = inst.machines();
  std::vector<Rational> cross = cross_costs(inst, alloc);
  EnvyGraph graph{m, std::vector<Rational>(static_cast<size_t>(m) * m)};
  for (int i = 0; i < m; ++i) {
    Rational own = alpha * cross[static_cast<size_t>(i) * m + i];
    for (int j = 0; j < m; ++j) {
      graph.weights[static_cast<size_t>(i) * m + j] = own - cross[static_cast<size_t>(i) * m + j];
    }
  }
  return graph;
}

ImprovementGraph make_improvement_graph(const Instance& inst, const Allocation& alloc) {
  check_dimensions(inst, alloc);
  const int m = inst.machines();
  std::vector<Rational> cross = cross_costs(inst, alloc);
  ImprovementGraph graph{m, {}};
  for (int i = 0; i < m; ++i) {
    const Rational& own = cross[static_cast<size_t>(i) * m + i];
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const Rational& other = cross[static_cast<size_t>(j) * m + i];
      const bool improves = inst.kind() == Kind::chores ? other < own : other > own;
      if (improves) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

bool is_acyclic(const ImprovementGraph& graph) {
  // Kahn's algorithm
  std::vector<int> indegree(graph.size, 0);
  std::vector<std::vector<int>> adjacent(graph.size);
  for (auto [i, j] : graph.edges) {
    adjacent[i].push_back(j);
    ++indegree[j];
  }
  std::vector<int> queue;
  for (int v = 0; v < graph.size; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int w : adjacent[v]) {
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  return removed == graph.size;
}

bool is_mean_efficient(const Instance& inst, const Allocation& alloc) {
  Rational total = total_cost(inst, alloc);
  Rational threshold = mean_efficiency_threshold(inst);
  return inst.kind() == Kind::chores ? total <= threshold : total >= threshold;
}

PaymentVector proportional_payments(const Instance& inst, const Allocation& alloc) {
  std::vector<Rational> loads = machine_loads(inst, alloc);
  const Rational m(inst.machines());
  PaymentVector p;
  p.payments.reserve(loads.size());
  for (int i = 0; i < inst.machines(); ++i) {
    p.payments.push_back(loads[i] - inst.row_sum(i) / m);
  }
  return p;
}

bool is_proportional(const Instance& inst, const Allocation& alloc, const PaymentVector& payments) {
  check_dimensions(inst, alloc);
  check_dimensions(inst, payments);
  std::vector<Rational> loads = machine_loads(inst, alloc);
  const Rational m(inst.machines());
  Rational payment_sum;
  for (const Rational& p : payments.payments) payment_sum += p;
  for (int i = 0; i < inst.machines(); ++i) {
    // Sum_j c_i(A_j) = c_i([n]) because the bundles partition the jobs.
    Rational lhs = loads[i] - payments.payments[i];
    Rational rhs = (inst.row_sum(i) - payment_sum) / m;
    if (inst.kind() == Kind::chores ? lhs > rhs : lhs < rhs) return false;
  }
  return true;
}

bool is_alpha_envy_free(const Instance& inst, const Allocation& alloc,
                        const PaymentVector& payments, const Rational& alpha) {
  check_chores(inst, "is_alpha_envy_free");
  check_alpha(alpha);
  check_dimensions(inst, alloc);
  check_dimensions(inst, payments);
  const int m = inst.machines();
  std::vector<Rational> cross = cross_costs(inst, alloc);
  for (int i = 0; i < m; ++i) {
    Rational own = alpha * cross[static_cast<size_t>(i) * m + i] - payments.payments[i];
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (own > cross[static_cast<size_t>(i) * m + j] - payments.payments[j]) return false;
    }
  }
  return true;
}

bool is_cyclic_envy_free(const Instance& inst, const Allocation& alloc,
                         const PaymentVector& payments, const Rational& alpha) {
  check_chores(inst, "is_cyclic_envy_free");
  check_alpha(alpha);
  check_dimensions(inst, alloc);
  check_dimensions(inst, payments);
  const int m = inst.machines();
  std::vector<Rational> cross = cross_costs(inst, alloc);
  for (int i = 0; i < m; ++i) {
    const int pred = (i + m - 1) % m;
    Rational own = alpha * cross[static_cast<size_t>(i) * m + i] - payments.payments[i];
    if (own > cross[static_cast<size_t>(i) * m + pred] - payments.payments[pred]) return false;
  }
  return true;
}

bool is_alpha_locally_efficient(const Instance& inst, const Allocation& alloc,
                                const Rational& alpha) {
  check_chores(inst, "is_alpha_locally_efficient");
  EnvyGraph graph = make_envy_graph(inst, alloc, alpha);
  return !longest_paths(graph).positive_cycle;
}

bool local_efficiency_bruteforce(const Instance& inst, const Allocation& alloc,
                                 const Rational& alpha, int machine_cap) {
  check_chores(inst, "local_efficiency_bruteforce");
  check_alpha(alpha);
  check_dimensions(inst, alloc);
  const int m = inst.machines();
  if (m > machine_cap) {
    throw std::invalid_argument("local_efficiency_bruteforce: machine count exceeds cap");
  }
  std::vector<Rational> cross = cross_costs(inst, alloc);
  auto at = [&](int i, int j) -> const Rational& { return cross[static_cast<size_t>(i) * m + j]; };

  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < m; ++v) {
      if (mask & (1u << v)) subset.push_back(v);
    }
    Rational lhs;
    for (int v : subset) lhs += at(v, v);
    lhs *= alpha;
    std::vector<int> perm = subset;
    do {
      Rational rhs;
      for (size_t t = 0; t < subset.size(); ++t) rhs += at(subset[t], perm[t]);
      if (lhs > rhs) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

HeaviestPathResult heaviest_path_payments(const Instance& inst, const Allocation& alloc,
                                          const Rational& alpha) {
  check_chores(inst, "heaviest_path_payments");
  EnvyGraph graph = make_envy_graph(inst, alloc, alpha);
  LongestPaths paths = longest_paths(graph);
  HeaviestPathResult result;
  if (paths.positive_cycle) {
    result.positive_cycle = std::move(paths.cycle);
  } else {
    result.payments = PaymentVector{std::move(paths.dist)};
  }
  return result;
}

}  // namespace fairspan
