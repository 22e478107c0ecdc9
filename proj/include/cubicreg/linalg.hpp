#pragma once

#include <vector>

namespace cubicreg {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, double c);
bool all_finite(const Vector& v);

/// Hard cap on matrix dimension. This is a desk-scale verification artifact,
/// not an HPC kernel.
inline constexpr int kMaxDim = 512;

/// Dense symmetric matrix. Construction symmetrizes as (A + A^T)/2, so
/// entry (i,j) equals entry (j,i) exactly, and rejects non-finite input.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);
  SymMatrix(int dim, const std::vector<double>& dense_row_major);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const Vector& diag);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
              static_cast<std::size_t>(j)];
  }
  /// Writes both (i,j) and (j,i).
  void set(int i, int j, double v);

  Vector apply(const Vector& x) const;  // A x
  double frobenius_norm() const;
  double max_abs() const;
  bool finite() const;

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix scaled_by(double c) const;

  const std::vector<double>& data() const { return e_; }

 private:
  int dim_ = 0;
  std::vector<double> e_;
};

/// Result of sym_eig. Eigenvalues ascending; column j of q is the
/// eigenvector for eigenvalues[j]; ties keep the order produced by the
/// sweep, sorted by (value, original index).
struct EigenDecomposition {
  int dim = 0;
  Vector eigenvalues;
  std::vector<double> q;  // row-major dim x dim

  double q_at(int i, int j) const {
    return q[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
             static_cast<std::size_t>(j)];
  }
  Vector column(int j) const;
  Vector apply_qt(const Vector& v) const;  // Q^T v
  Vector apply_q(const Vector& v) const;   // Q v
  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_abs_eigenvalue() const;
};

/// Cyclic Jacobi eigendecomposition. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-14 * ||A||_F, at most 100 sweeps.
/// Deterministic for a fixed input.
EigenDecomposition sym_eig(const SymMatrix& a);

/// Largest absolute eigenvalue.
double spectral_norm(const SymMatrix& a);

double min_eigenvalue(const SymMatrix& a);

/// Solves (A + shift I) x = rhs in the eigenbasis. In pseudo-solve mode,
/// components with |lambda_i + shift| <= 1e-12 * (1 + |shift|) are dropped
/// (pseudoinverse action); outside it such a shift raises SingularShift.
Vector shifted_solve(const EigenDecomposition& eig, double shift,
                     const Vector& rhs, bool pseudo_solve = false);

}  // namespace cubicreg
