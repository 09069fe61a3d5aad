#ifndef FINMAX_CORE_HPP
#define FINMAX_CORE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "finmax/errors.hpp"

namespace finmax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Value/gradient oracle for one subfunction f_i : R^n -> R.
struct Subfunction {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
};

/// Evaluation backend for an indexed family of subfunctions.
///
/// A backend owns the data of the family and knows how to evaluate all
/// values at once and how to form y-weighted gradient combinations; dense
/// problem families override the batch entry points with closed forms so
/// solvers do one or two matrix products per iteration instead of N
/// closure calls. `subset` produces the backend of a reduced family.
class ProblemBackend {
 public:
  virtual ~ProblemBackend() = default;

  virtual int dim() const = 0;
  virtual int size() const = 0;

  virtual double value_at(int pos, const Vector& x) const = 0;
  virtual Vector gradient_at(int pos, const Vector& x) const = 0;

  /// All subfunction values at x, as a size() vector.
  virtual Vector values(const Vector& x) const;

  /// sum_i y_i * grad f_i(x).
  virtual Vector weighted_gradient(const Vector& x, const Vector& y) const;

  /// Values and weighted gradient at the same point; overridden where the
  /// two share intermediate products.
  virtual void eval_operator(const Vector& x, const Vector& y,
                             Vector& values_out, Vector& wgrad_out) const;

  /// Backend of the subfamily at the given 0-based positions.
  virtual std::shared_ptr<const ProblemBackend> subset(
      const std::vector<int>& positions) const = 0;
};

/// Backend over plain value/gradient closures.
class ClosureBackend final : public ProblemBackend {
 public:
  ClosureBackend(int dim, std::vector<Subfunction> subs);

  int dim() const override { return dim_; }
  int size() const override { return static_cast<int>(subs_.size()); }
  double value_at(int pos, const Vector& x) const override;
  Vector gradient_at(int pos, const Vector& x) const override;
  std::shared_ptr<const ProblemBackend> subset(
      const std::vector<int>& positions) const override;

 private:
  int dim_;
  std::vector<Subfunction> subs_;
};

/// Pointwise-maximum problem f(x) = max_i f_i(x) over a finite family of
/// smooth convex subfunctions, given through value/gradient oracles.
///
/// Immutable after construction and safe to share across threads provided
/// the oracles are re-entrant. Subfunctions carry 1-based ids: `labels()[pos]`
/// is the id of the subfunction stored at 0-based position `pos` in the
/// problem this one was reduced from (the identity map 1..N for a fresh
/// problem). All externally reported index sets use these ids.
class MaxProblem {
 public:
  /// Closure-backed family; labels default to 1..N.
  MaxProblem(int dim, std::vector<Subfunction> subs, double tie_tol = 1e-12);

  MaxProblem(std::shared_ptr<const ProblemBackend> backend,
             std::vector<int> labels, double tie_tol = 1e-12);

  int dim() const { return backend_->dim(); }
  int size() const { return backend_->size(); }

  double value_at(int pos, const Vector& x) const;
  Vector gradient_at(int pos, const Vector& x) const;

  /// All subfunction values; throws Error(evaluation) naming the offending
  /// subfunction if any value is non-finite.
  Vector values(const Vector& x) const;

  /// sum_i y_i grad f_i(x); finite-checked like values().
  Vector weighted_gradient(const Vector& x, const Vector& y) const;

  /// values() and weighted_gradient() at the same x, sharing work.
  void eval_operator(const Vector& x, const Vector& y, Vector& values_out,
                     Vector& wgrad_out) const;

  const std::vector<int>& labels() const { return labels_; }

  /// Absolute tie tolerance for arg-max membership.
  double tie_tolerance() const { return tie_tol_; }

  MaxProblem with_tie_tolerance(double tol) const;

  const std::shared_ptr<const ProblemBackend>& backend() const {
    return backend_;
  }

 private:
  std::shared_ptr<const ProblemBackend> backend_;
  std::vector<int> labels_;
  double tie_tol_;
};

/// Primal-dual pair z = (x, y) with y meant to lie in the probability
/// simplex of dimension matching the problem.
struct PrimalDualPoint {
  Vector x;
  Vector y;
};

/// Which measurement produced a support set.
enum class MeasureKind {
  naive,
  oplus,
  eps,
  a_rho1,
  aplus_rho1,
  a_rho2,
  aplus_rho2,
  a_rho3,
  aplus_rho3,
  argmax,
  ground_truth,
};

std::string measure_kind_name(MeasureKind kind);
MeasureKind measure_kind_from_name(const std::string& name);

/// Ordered set of subfunction ids (1-based) with provenance.
struct SupportSet {
  std::vector<int> indices;  ///< sorted ascending, duplicate free
  MeasureKind measure_kind = MeasureKind::argmax;
  long iteration = 0;
  double tolerance = 0.0;

  bool contains(int id) const;
  std::size_t size() const { return indices.size(); }
};

/// Per-iteration solver record. Certificate fields are meaningful only when
/// has_certificate is set (subgradient runs track the objective alone).
struct TraceRow {
  long k = 0;
  double f = 0.0;
  double gap = 0.0;
  double grad_norm = 0.0;
  double dual_residual = 0.0;
  double lambda = 0.0;
  int n_current = 0;
  bool has_certificate = false;
};

/// One support-correction step: the working family was replaced by
/// new_support (indices valid in the pre-reduction problem) and the dual
/// variable reset to y_reset. `new_support_original` is the same set mapped
/// through labels to the original problem's ids. A skipped event records a
/// measurement that came back empty, where the reduction was not applied.
struct ReductionEvent {
  long iteration = 0;
  int old_support_size = 0;
  SupportSet new_support;
  std::vector<int> new_support_original;
  Vector y_reset;
  bool skipped = false;
};

struct SolverTrace {
  std::vector<TraceRow> rows;
  std::vector<ReductionEvent> events;
};

struct EvalResult {
  double value;
  SupportSet argmax_set;
};

/// f(x) together with the set of arguments attaining the max within the
/// problem's tie tolerance. Ids follow the problem's own indexing (1..N).
EvalResult eval_f(const MaxProblem& p, const Vector& x);

/// Restriction of the family to the given support. Subfunction j of the
/// result is subfunction s.indices[j] of p; labels compose so that they
/// always refer to the original indexing.
MaxProblem reduce_problem(const MaxProblem& p, const SupportSet& s);

/// Map a support measured on (possibly reduced) p to original ids.
std::vector<int> to_original_ids(const MaxProblem& p,
                                 const std::vector<int>& indices);

}  // namespace finmax

#endif  // FINMAX_CORE_HPP
