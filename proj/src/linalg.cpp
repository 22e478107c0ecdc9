#include "cubicreg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "cubicreg/errors.hpp"

namespace cubicreg {

namespace {

std::size_t idx(int i, int j, int n) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(j);
}

int checked_dim(int dim) {
  if (dim < 1) throw InvalidMatrix("matrix dimension must be positive");
  if (dim > kMaxDim)
    throw InvalidMatrix("matrix dimension " + std::to_string(dim) +
                        " exceeds the cap of " + std::to_string(kMaxDim));
  return dim;
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(const Vector& v, double c) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool all_finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

SymMatrix::SymMatrix(int dim)
    : dim_(checked_dim(dim)),
      e_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {}

SymMatrix::SymMatrix(int dim, const std::vector<double>& dense)
    : dim_(checked_dim(dim)) {
  const std::size_t n = static_cast<std::size_t>(dim);
  if (dense.size() != n * n)
    throw InvalidMatrix("dense input has wrong element count");
  e_.resize(n * n);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      e_[idx(i, j, dim)] = 0.5 * (dense[idx(i, j, dim)] + dense[idx(j, i, dim)]);
  if (!finite()) throw InvalidMatrix("matrix has non-finite entries");
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const Vector& diag) {
  SymMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, diag[static_cast<std::size_t>(i)]);
  return m;
}

void SymMatrix::set(int i, int j, double v) {
  e_[idx(i, j, dim_)] = v;
  e_[idx(j, i, dim_)] = v;
}

Vector SymMatrix::apply(const Vector& x) const {
  Vector y(static_cast<std::size_t>(dim_), 0.0);
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += e_[idx(i, j, dim_)] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : e_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : e_) m = std::max(m, std::abs(v));
  return m;
}

bool SymMatrix::finite() const {
  for (double v : e_)
    if (!std::isfinite(v)) return false;
  return true;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  if (o.dim_ != dim_) throw DimMismatch("matrix dimensions disagree");
  SymMatrix r(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  if (o.dim_ != dim_) throw DimMismatch("matrix dimensions disagree");
  SymMatrix r(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

SymMatrix SymMatrix::scaled_by(double c) const {
  SymMatrix r(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

Vector EigenDecomposition::column(int j) const {
  Vector v(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = q_at(i, j);
  return v;
}

Vector EigenDecomposition::apply_qt(const Vector& v) const {
  Vector y(static_cast<std::size_t>(dim), 0.0);
  for (int j = 0; j < dim; ++j) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += q_at(i, j) * v[static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(j)] = s;
  }
  return y;
}

Vector EigenDecomposition::apply_q(const Vector& v) const {
  Vector y(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += q_at(i, j) * v[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

double EigenDecomposition::max_abs_eigenvalue() const {
  return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

EigenDecomposition sym_eig(const SymMatrix& a) {
  if (!a.finite()) throw InvalidMatrix("sym_eig: non-finite input");
  const int n = a.dim();
  std::vector<double> w = a.data();
  std::vector<double> q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) q[idx(i, i, n)] = 1.0;

  const double stop = 1e-14 * a.frobenius_norm();
  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += w[idx(i, j, n)] * w[idx(i, j, n)];
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = w[idx(p, r, n)];
        if (apr == 0.0) continue;
        const double app = w[idx(p, p, n)];
        const double arr = w[idx(r, r, n)];
        const double theta = 0.5 * (arr - app) / apr;
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;  // avoid overflow in theta^2
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        for (int i = 0; i < n; ++i) {
          if (i == p || i == r) continue;
          const double aip = w[idx(i, p, n)];
          const double air = w[idx(i, r, n)];
          const double nip = aip - s * (air + tau * aip);
          const double nir = air + s * (aip - tau * air);
          w[idx(i, p, n)] = nip;
          w[idx(p, i, n)] = nip;
          w[idx(i, r, n)] = nir;
          w[idx(r, i, n)] = nir;
        }
        w[idx(p, p, n)] = app - t * apr;
        w[idx(r, r, n)] = arr + t * apr;
        w[idx(p, r, n)] = 0.0;
        w[idx(r, p, n)] = 0.0;

        for (int i = 0; i < n; ++i) {
          const double qip = q[idx(i, p, n)];
          const double qir = q[idx(i, r, n)];
          q[idx(i, p, n)] = qip - s * (qir + tau * qip);
          q[idx(i, r, n)] = qir + s * (qip - tau * qir);
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return w[idx(x, x, n)] < w[idx(y, y, n)];
  });

  EigenDecomposition out;
  out.dim = n;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.q.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.eigenvalues[static_cast<std::size_t>(j)] = w[idx(src, src, n)];
    for (int i = 0; i < n; ++i) out.q[idx(i, j, n)] = q[idx(i, src, n)];
  }
  return out;
}

double spectral_norm(const SymMatrix& a) {
  return sym_eig(a).max_abs_eigenvalue();
}

double min_eigenvalue(const SymMatrix& a) {
  return sym_eig(a).min_eigenvalue();
}

Vector shifted_solve(const EigenDecomposition& eig, double shift,
                     const Vector& rhs, bool pseudo_solve) {
  if (static_cast<int>(rhs.size()) != eig.dim)
    throw DimMismatch("shifted_solve: rhs size does not match decomposition");
  const double drop = 1e-12 * (1.0 + std::abs(shift));
  Vector y = eig.apply_qt(rhs);
  for (int i = 0; i < eig.dim; ++i) {
    const double d = eig.eigenvalues[static_cast<std::size_t>(i)] + shift;
    if (std::abs(d) <= drop) {
      if (!pseudo_solve)
        throw SingularShift("shifted_solve: shift is numerically singular");
      y[static_cast<std::size_t>(i)] = 0.0;
    } else {
      y[static_cast<std::size_t>(i)] /= d;
    }
  }
  return eig.apply_q(y);
}

}  // namespace cubicreg
