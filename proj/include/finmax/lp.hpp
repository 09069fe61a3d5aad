#ifndef FINMAX_LP_HPP
#define FINMAX_LP_HPP

#include <vector>

#include "finmax/core.hpp"

namespace finmax {

/// Dense linear program
///   min c'x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x_j >= lower_j,
/// where lower_j = -inf (free) by default. Matrices may have zero rows.
struct DenseLP {
  Vector c;
  Matrix A_eq;
  Vector b_eq;
  Matrix A_ub;
  Vector b_ub;
  /// Per-variable lower bounds; empty means all variables free.
  Vector lower;

  int num_vars() const { return static_cast<int>(c.size()); }
};

enum class LPStatus { optimal, infeasible, unbounded };

/// Solution of a DenseLP. Duals follow the convention
///   reduced cost r_j = c_j - eq_duals'A_eq_col_j - ub_duals'A_ub_col_j >= 0
/// at optimum (ub_duals <= 0). active_rows lists the 0-based inequality
/// rows tight at x within the active-row tolerance.
struct LPSolution {
  LPStatus status = LPStatus::optimal;
  Vector x;
  double objective_value = 0.0;
  std::vector<int> active_rows;
  Vector eq_duals;
  Vector ub_duals;
  long iterations = 0;
};

/// Two-phase dense simplex method with Bland's anti-cycling rule.
/// Intended for desk-scale problems (at most a few thousand rows/columns,
/// and a basis of at most a few hundred rows).
LPSolution solve_lp(const DenseLP& lp, double active_tol = 1e-8);

/// Ground truth for min_x max_i <alpha_i, x> + beta_i.
struct PlGroundTruth {
  Vector x_star;
  double f_star = 0.0;
  SupportSet support;   ///< every constraint tight at the optimum, 1-based
  Vector multipliers;   ///< y in the simplex with sum_i y_i alpha_i = 0
};

/// Solves the epigraph LP  min_{x,t} t  s.t.  <alpha_i, x> + beta_i <= t
/// through its simplex dual  max beta'y  s.t.  alphas'y = 0, y in Delta^N,
/// recovering x* from the equality-row duals. The support contains all
/// rows within tol of the optimal value, so degenerate optima report the
/// full tight set. Throws Error(unbounded) when the max function has no
/// minimiser.
PlGroundTruth pl_ground_truth(const Matrix& alphas, const Vector& betas,
                              double tol = 1e-8);

}  // namespace finmax

#endif  // FINMAX_LP_HPP
