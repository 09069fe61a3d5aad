#ifndef FINMAX_SIMPLEX_HPP
#define FINMAX_SIMPLEX_HPP

#include "finmax/core.hpp"

namespace finmax {

/// Result of projecting a vector onto the probability simplex.
/// point_i = max(v_i - tau, 0) for the returned pivot tau.
struct SimplexProjectionResult {
  Vector point;
  double tau = 0.0;
};

/// Euclidean projection onto the probability simplex, by descending sort
/// and cumulative-sum pivot (O(N log N)). Sort ties are broken by index.
SimplexProjectionResult project_simplex(const Vector& v);

/// True when y is in the simplex up to the given absolute tolerance.
bool in_simplex(const Vector& y, double tol = 1e-9);

/// Residual of the normal-cone condition g in -N_{Delta}(y), i.e. of y
/// maximising <g, .> over the simplex:
///   max(0, max_{y' in Delta} <g, y' - y>) = max(0, max_i g_i - <g, y>).
/// Zero exactly when y is supported on the arg-max entries of g.
double normal_cone_residual(const Vector& y, const Vector& g);

}  // namespace finmax

#endif  // FINMAX_SIMPLEX_HPP
