#pragma once

#include <utility>

#include "cubicreg/linalg.hpp"

namespace cubicreg {

/// Global minimizer of u -> g.u + u.Hu/2 + (m/6)||u||^3 together with its
/// certified optimality data. On return
///   stationarity_residual = ||g + H s + (m/2)||s|| s||,
///   curvature_slack       = lambda_min(H) + (m/2)||s||,
///   model_value           = the model evaluated at s,
/// and solve_cubic guarantees
///   stationarity_residual <= 1e-8 (1 + ||g||),
///   curvature_slack       >= -1e-8 (1 + ||H||),
///   model_value           <= -(m/12)||s||^3 + 1e-10 (1 + ||g|| + ||H||).
struct SubproblemSolution {
  Vector step;
  double radius = 0.0;      // ||s||
  double multiplier = 0.0;  // (m/2) ||s||
  double stationarity_residual = 0.0;
  double curvature_slack = 0.0;
  double model_value = 0.0;
  bool hard_case = false;
};

/// Exact solve via eigendecomposition plus safeguarded root finding on the
/// secular equation in r = ||s||; the hard case adds a scaled eigenvector of
/// the smallest eigenvalue. Deterministic. Throws DimMismatch on size
/// disagreement and SubproblemFailure if a safeguard is exhausted or an
/// optimality residual comes out above tolerance.
SubproblemSolution solve_cubic(const Vector& g, const SymMatrix& h,
                               double m_reg);

/// The cubic model g.s + s.Hs/2 + (m/6)||s||^3 at s.
double model_value(const Vector& g, const SymMatrix& h, double m_reg,
                   const Vector& s);

/// Independent small-dimension oracle: multi-start damped Newton descent on
/// the model from `restarts` random seeds plus scaled eigenvector seeds.
/// Returns the best (point, value) found. dim <= 4 only; shares no code with
/// the secular-equation path of solve_cubic.
std::pair<Vector, double> brute_force_min(const Vector& g, const SymMatrix& h,
                                          double m_reg, int restarts);

}  // namespace cubicreg
