#include "finmax/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace finmax {

SimplexProjectionResult project_simplex(const Vector& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw_invalid("project_simplex: empty input");
  if (!v.allFinite()) throw_invalid("project_simplex: non-finite input");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (v[a] != v[b]) return v[a] > v[b];
    return a < b;
  });

  // Largest k with u_k - (cumsum_k - 1)/k > 0; u = v sorted descending.
  // k = 1 always qualifies, so tau is set at least once.
  double tau = v[order[0]] - 1.0;
  double running = 0.0;
  for (int k = 0; k < n; ++k) {
    running += v[order[k]];
    double t = (running - 1.0) / static_cast<double>(k + 1);
    if (v[order[k]] - t > 0.0) tau = t;
  }

  SimplexProjectionResult out;
  out.tau = tau;
  out.point = (v.array() - tau).cwiseMax(0.0);
  return out;
}

bool in_simplex(const Vector& y, double tol) {
  if (y.size() < 1) return false;
  if (!y.allFinite()) return false;
  if (y.minCoeff() < -tol) return false;
  return std::abs(y.sum() - 1.0) <= tol;
}

double normal_cone_residual(const Vector& y, const Vector& g) {
  if (y.size() != g.size())
    throw_invalid("normal_cone_residual: size mismatch");
  if (!in_simplex(y))
    throw_invalid("normal_cone_residual: y is not in the simplex");
  double r = g.maxCoeff() - g.dot(y);
  return std::max(0.0, r);
}

}  // namespace finmax
