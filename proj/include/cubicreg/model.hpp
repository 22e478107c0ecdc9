#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "cubicreg/linalg.hpp"

namespace cubicreg {

/// Axis-aligned box on which a problem's Lipschitz constant is certified.
struct Box {
  Vector lo;
  Vector hi;
  bool contains(const Vector& x) const;
};

/// Finite-sum structure for subsampled oracles: the objective is the mean of
/// the components plus an optional deterministic base term (evaluated exactly
/// by every oracle).
struct FiniteSum {
  int n = 0;
  std::function<double(int, const Vector&)> component_value;
  std::function<Vector(int, const Vector&)> component_gradient;
  std::function<SymMatrix(int, const Vector&)> component_hessian;
  std::function<double(const Vector&)> base_value;
  std::function<Vector(const Vector&)> base_gradient;
  std::function<SymMatrix(const Vector&)> base_hessian;
};

/// An objective with exact evaluators and the constants the certificates
/// need: a Hessian Lipschitz bound valid on `box` and a lower bound on the
/// objective value.
struct Problem {
  std::string name;
  int dim = 0;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<SymMatrix(const Vector&)> hessian;
  double lipschitz_L = 0.0;
  double f_lower = 0.0;
  Box box;
  Vector default_x0;
  std::optional<FiniteSum> finite_sum;
  std::uint64_t dataset_seed = 0;  // nonzero only for synthetic datasets
};

struct EvalResult {
  double value = 0.0;
  Vector gradient;
  SymMatrix hessian;
};

/// Evaluates value, gradient and Hessian at x. Throws OutOfDomain when x
/// leaves the box (the Lipschitz constant is no longer certified there).
EvalResult eval_all(const Problem& p, const Vector& x);

/// Relative max-errors of the analytic gradient and Hessian against central
/// finite differences with step h. The Hessian is differenced from the
/// analytic gradient. Requires x +- h e_i inside the box.
std::pair<double, double> finite_diff_check(const Problem& p, const Vector& x,
                                            double h);

/// Built-in nonconvex suite: quadratic, double_well, rosenbrock,
/// saddle_quartic, logistic_nonconvex.
Problem builtin_problem(const std::string& name, int dim);

}  // namespace cubicreg
