#include "berge/predicates.hh"

#include <algorithm>

#include "berge/error.hh"

namespace berge {

PredicateConfig make_predicate(const std::string& name, int k) {
  if (name == "two_conn_third") return {name, 2, DegreeBound::two_conn_third, Target::x_spanning};
  if (name == "three_conn_quarter")
    return {name, 3, DegreeBound::three_conn_quarter, Target::x_spanning};
  if (name == "k_conn_general") {
    if (k < 1) throw Error("k_conn_general needs k >= 1");
    return {name, k, DegreeBound::k_conn_general, Target::x_spanning};
  }
  if (name == "long_cycle") return {name, 2, DegreeBound::long_cycle, Target::long_cycle};
  throw Error("unknown predicate '" + name + "'");
}

std::vector<std::string> predicate_names() {
  return {"two_conn_third", "three_conn_quarter", "k_conn_general", "long_cycle"};
}

int long_cycle_alpha(int delta) { return delta % 2 == 0 ? 1 : 0; }

bool bound_holds(const PredicateConfig& p, int n, int m, int delta) {
  if (n < 2 || delta > m || delta < 1) return false;
  switch (p.bound) {
    case DegreeBound::two_conn_third:
      return delta >= n && 3 * delta >= m + 5;
    case DegreeBound::three_conn_quarter:
      return delta >= n && 4 * delta >= m + 10;
    case DegreeBound::k_conn_general: {
      const int k = p.connectivity_k;
      return delta >= n && m <= (k + 1) * (delta - k) + k - 1;
    }
    case DegreeBound::long_cycle: {
      const int a = long_cycle_alpha(delta);
      const int den = delta - 1 - a;
      if (n <= delta || den <= 0) return false;
      return m <= (2 * (n - a)) / den * (delta - 2) + 1;
    }
  }
  return false;
}

int max_m(const PredicateConfig& p, int n, int delta) {
  int best = -1;
  // Every bound is monotone in m; the ceiling keeps the scan finite.
  for (int m = delta; m <= 4 * delta + 4 * n + 64; ++m)
    if (bound_holds(p, n, m, delta)) best = m;
  return best;
}

int target_length(const PredicateConfig& p, int n, int delta) {
  return p.target == Target::x_spanning ? 2 * n : 2 * std::min(n, delta);
}

std::string describe(const PredicateConfig& p) {
  const std::string k = std::to_string(p.connectivity_k);
  switch (p.bound) {
    case DegreeBound::two_conn_third:
      return "2-connected, delta >= max{n, (m+5)/3} => cycle of length 2n";
    case DegreeBound::three_conn_quarter:
      return "3-connected, delta >= max{n, (m+10)/4} => cycle of length 2n";
    case DegreeBound::k_conn_general:
      return k + "-connected, delta >= n, m <= (k+1)(delta-k)+k-1 => cycle of length 2n";
    case DegreeBound::long_cycle:
      return "2-connected, n > delta, m <= floor(2(n-a)/(delta-1-a))(delta-2)+1 => cycle of "
             "length >= 2 min(n, delta)";
  }
  return p.name;
}

}  // namespace berge
