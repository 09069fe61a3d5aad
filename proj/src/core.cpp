#include "finmax/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace finmax {

Vector ProblemBackend::values(const Vector& x) const {
  Vector v(size());
  for (int i = 0; i < size(); ++i) v[i] = value_at(i, x);
  return v;
}

Vector ProblemBackend::weighted_gradient(const Vector& x,
                                         const Vector& y) const {
  Vector g = Vector::Zero(dim());
  for (int i = 0; i < size(); ++i) {
    if (y[i] != 0.0) g += y[i] * gradient_at(i, x);
  }
  return g;
}

void ProblemBackend::eval_operator(const Vector& x, const Vector& y,
                                   Vector& values_out,
                                   Vector& wgrad_out) const {
  values_out = values(x);
  wgrad_out = weighted_gradient(x, y);
}

ClosureBackend::ClosureBackend(int dim, std::vector<Subfunction> subs)
    : dim_(dim), subs_(std::move(subs)) {}

double ClosureBackend::value_at(int pos, const Vector& x) const {
  return subs_[pos].value(x);
}

Vector ClosureBackend::gradient_at(int pos, const Vector& x) const {
  return subs_[pos].gradient(x);
}

std::shared_ptr<const ProblemBackend> ClosureBackend::subset(
    const std::vector<int>& positions) const {
  std::vector<Subfunction> subs;
  subs.reserve(positions.size());
  for (int pos : positions) subs.push_back(subs_[pos]);
  return std::make_shared<ClosureBackend>(dim_, std::move(subs));
}

MaxProblem::MaxProblem(int dim, std::vector<Subfunction> subs, double tie_tol)
    : MaxProblem(std::make_shared<ClosureBackend>(dim, std::move(subs)), {},
                 tie_tol) {}

MaxProblem::MaxProblem(std::shared_ptr<const ProblemBackend> backend,
                       std::vector<int> labels, double tie_tol)
    : backend_(std::move(backend)),
      labels_(std::move(labels)),
      tie_tol_(tie_tol) {
  if (backend_->size() < 1 || backend_->dim() < 1)
    throw_invalid("MaxProblem requires N >= 1 and n >= 1");
  if (tie_tol_ < 0.0) throw_invalid("tie tolerance must be nonnegative");
  if (labels_.empty()) {
    labels_.resize(backend_->size());
    for (int i = 0; i < backend_->size(); ++i) labels_[i] = i + 1;
  } else if (static_cast<int>(labels_.size()) != backend_->size()) {
    throw_invalid("label count does not match subfunction count");
  }
}

double MaxProblem::value_at(int pos, const Vector& x) const {
  double v = backend_->value_at(pos, x);
  if (!std::isfinite(v))
    throw_eval("subfunction " + std::to_string(pos + 1) +
               " returned a non-finite value");
  return v;
}

Vector MaxProblem::gradient_at(int pos, const Vector& x) const {
  Vector g = backend_->gradient_at(pos, x);
  if (!g.allFinite())
    throw_eval("subfunction " + std::to_string(pos + 1) +
               " returned a non-finite gradient");
  return g;
}

namespace {

void check_values_finite(const Vector& v) {
  if (v.allFinite()) return;
  for (int i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]))
      throw_eval("subfunction " + std::to_string(i + 1) +
                 " returned a non-finite value");
  }
}

}  // namespace

Vector MaxProblem::values(const Vector& x) const {
  Vector v = backend_->values(x);
  check_values_finite(v);
  return v;
}

Vector MaxProblem::weighted_gradient(const Vector& x, const Vector& y) const {
  Vector g = backend_->weighted_gradient(x, y);
  if (!g.allFinite()) throw_eval("weighted gradient is non-finite");
  return g;
}

void MaxProblem::eval_operator(const Vector& x, const Vector& y,
                               Vector& values_out, Vector& wgrad_out) const {
  backend_->eval_operator(x, y, values_out, wgrad_out);
  check_values_finite(values_out);
  if (!wgrad_out.allFinite()) throw_eval("weighted gradient is non-finite");
}

MaxProblem MaxProblem::with_tie_tolerance(double tol) const {
  return MaxProblem(backend_, labels_, tol);
}

std::string measure_kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::naive: return "naive";
    case MeasureKind::oplus: return "oplus";
    case MeasureKind::eps: return "eps";
    case MeasureKind::a_rho1: return "a_rho1";
    case MeasureKind::aplus_rho1: return "aplus_rho1";
    case MeasureKind::a_rho2: return "a_rho2";
    case MeasureKind::aplus_rho2: return "aplus_rho2";
    case MeasureKind::a_rho3: return "a_rho3";
    case MeasureKind::aplus_rho3: return "aplus_rho3";
    case MeasureKind::argmax: return "argmax";
    case MeasureKind::ground_truth: return "ground_truth";
  }
  return "unknown";
}

MeasureKind measure_kind_from_name(const std::string& name) {
  for (MeasureKind k :
       {MeasureKind::naive, MeasureKind::oplus, MeasureKind::eps,
        MeasureKind::a_rho1, MeasureKind::aplus_rho1, MeasureKind::a_rho2,
        MeasureKind::aplus_rho2, MeasureKind::a_rho3, MeasureKind::aplus_rho3,
        MeasureKind::argmax, MeasureKind::ground_truth}) {
    if (measure_kind_name(k) == name) return k;
  }
  throw_invalid("unknown support measure '" + name + "'");
}

bool SupportSet::contains(int id) const {
  return std::binary_search(indices.begin(), indices.end(), id);
}

EvalResult eval_f(const MaxProblem& p, const Vector& x) {
  if (x.size() != p.dim()) throw_invalid("eval_f: x has wrong dimension");
  if (!x.allFinite()) throw_invalid("eval_f: x is not finite");
  Vector v = p.values(x);
  double fmax = v.maxCoeff();
  SupportSet s;
  s.measure_kind = MeasureKind::argmax;
  s.tolerance = p.tie_tolerance();
  for (int i = 0; i < v.size(); ++i) {
    if (fmax - v[i] <= p.tie_tolerance()) s.indices.push_back(i + 1);
  }
  return EvalResult{fmax, std::move(s)};
}

MaxProblem reduce_problem(const MaxProblem& p, const SupportSet& s) {
  if (s.indices.empty())
    throw_invalid("reduce_problem: empty support");
  std::vector<int> positions;
  std::vector<int> labels;
  positions.reserve(s.indices.size());
  labels.reserve(s.indices.size());
  int prev = 0;
  for (int id : s.indices) {
    if (id < 1 || id > p.size())
      throw_invalid("reduce_problem: index " + std::to_string(id) +
                    " out of range [1, " + std::to_string(p.size()) + "]");
    if (id <= prev)
      throw_invalid("reduce_problem: indices must be sorted and distinct");
    prev = id;
    positions.push_back(id - 1);
    labels.push_back(p.labels()[id - 1]);
  }
  return MaxProblem(p.backend()->subset(positions), std::move(labels),
                    p.tie_tolerance());
}

std::vector<int> to_original_ids(const MaxProblem& p,
                                 const std::vector<int>& indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int id : indices) {
    if (id < 1 || id > p.size())
      throw_invalid("to_original_ids: index out of range");
    out.push_back(p.labels()[id - 1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace finmax
