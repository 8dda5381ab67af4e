#pragma once

#include <string>
#include <vector>

namespace berge {

enum class DegreeBound { two_conn_third, three_conn_quarter, k_conn_general, long_cycle };

enum class Target {
  x_spanning,  // a cycle of length 2n
  long_cycle,  // a cycle of length >= 2 min(n, delta)
};

struct PredicateConfig {
  std::string name;
  int connectivity_k = 0;
  DegreeBound bound = DegreeBound::three_conn_quarter;
  Target target = Target::x_spanning;
};

/// two_conn_third, three_conn_quarter, k_conn_general (uses k) or
/// long_cycle. Throws berge::Error on an unknown name or k < 1.
PredicateConfig make_predicate(const std::string& name, int k = 3);
std::vector<std::string> predicate_names();

/// 1 when delta is even, 0 when odd.
int long_cycle_alpha(int delta);

/// The degree condition on (n, m, delta). Also requires n >= 2 and
/// delta <= m; long_cycle additionally needs n > delta and a positive
/// denominator.
bool bound_holds(const PredicateConfig& p, int n, int m, int delta);

/// Largest m for which bound_holds(p, n, m, delta), or -1 when none.
int max_m(const PredicateConfig& p, int n, int delta);

/// Length the conclusion asks for.
int target_length(const PredicateConfig& p, int n, int delta);

std::string describe(const PredicateConfig& p);

}  // namespace berge
