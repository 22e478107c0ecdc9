#include "cubicreg/model.hpp"

#include <cmath>
#include <memory>

#include "cubicreg/errors.hpp"
#include "cubicreg/rng.hpp"

namespace cubicreg {

namespace {

constexpr int kLogisticSamples = 64;
constexpr std::uint64_t kLogisticSeed = 8675309u;

void check_point(const Problem& p, const Vector& x) {
  if (static_cast<int>(x.size()) != p.dim)
    throw DimMismatch("point dimension does not match problem");
  if (!all_finite(x)) throw OutOfDomain("point has non-finite entries");
  if (!p.box.contains(x))
    throw OutOfDomain("point left the certified box of problem '" + p.name +
                      "'");
}

Box cube(int dim, double half_width) {
  Box b;
  b.lo.assign(static_cast<std::size_t>(dim), -half_width);
  b.hi.assign(static_cast<std::size_t>(dim), half_width);
  return b;
}

Problem make_quadratic(int dim) {
  Problem p;
  p.name = "quadratic";
  p.dim = dim;
  p.value = [](const Vector& x) { return 0.5 * dot(x, x); };
  p.gradient = [](const Vector& x) { return x; };
  p.hessian = [dim](const Vector&) { return SymMatrix::identity(dim); };
  p.lipschitz_L = 0.0;
  p.f_lower = 0.0;
  p.box = cube(dim, 10.0);
  p.default_x0.assign(static_cast<std::size_t>(dim), 0.0);
  p.default_x0[0] = 1.0;
  return p;
}

Problem make_double_well(int dim) {
  Problem p;
  p.name = "double_well";
  p.dim = dim;
  p.value = [](const Vector& x) {
    double f = 0.0;
    for (double xi : x) {
      const double t = xi * xi - 1.0;
      f += t * t;
    }
    return f;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = 4.0 * x[i] * (x[i] * x[i] - 1.0);
    return g;
  };
  p.hessian = [dim](const Vector& x) {
    Vector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = 12.0 * x[i] * x[i] - 4.0;
    (void)dim;
    return SymMatrix::diagonal(d);
  };
  // Per-coordinate third derivative is 24 x_i, at most 48 on [-2,2]; the
  // Hessian is diagonal, so this bounds the spectral-norm Lipschitz constant.
  p.lipschitz_L = 48.0;
  p.f_lower = 0.0;
  p.box = cube(dim, 2.0);
  p.default_x0.assign(static_cast<std::size_t>(dim), 0.0);  // strict saddle
  return p;
}

Problem make_rosenbrock(int dim) {
  if (dim != 2)
    throw UnknownProblem("rosenbrock is defined for dim=2 only");
  Problem p;
  p.name = "rosenbrock";
  p.dim = 2;
  p.value = [](const Vector& x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
  };
  p.gradient = [](const Vector& x) {
    const double b = x[1] - x[0] * x[0];
    return Vector{-2.0 * (1.0 - x[0]) - 400.0 * x[0] * b, 200.0 * b};
  };
  p.hessian = [](const Vector& x) {
    SymMatrix h(2);
    h.set(0, 0, 2.0 - 400.0 * x[1] + 1200.0 * x[0] * x[0]);
    h.set(0, 1, -400.0 * x[0]);
    h.set(1, 1, 200.0);
    return h;
  };
  // Third-derivative tensor bound on [-2,2]^2: the only nonzero entries are
  // d3/dx1^3 = 2400 x1 and d3/dx1^2 dx2 = -400, giving
  // sup ||T[w]||_F <= sqrt(4800^2 + 400^2 + 2*400^2) ||w|| < 4850 ||w||.
  p.lipschitz_L = 4850.0;
  p.f_lower = 0.0;
  p.box = cube(2, 2.0);
  p.default_x0 = {-1.2, 1.0};
  return p;
}

Problem make_saddle_quartic(int dim) {
  if (dim < 2)
    throw UnknownProblem("saddle_quartic needs dim >= 2 for a strict saddle");
  Problem p;
  p.name = "saddle_quartic";
  p.dim = dim;
  // Curvature signs alternate starting at +1, so dim=2 gives diag(1,-1).
  auto sign_of = [](std::size_t i) { return (i % 2 == 0) ? 1.0 : -1.0; };
  p.value = [sign_of](const Vector& x) {
    double q = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      q += sign_of(i) * x[i] * x[i];
      n2 += x[i] * x[i];
    }
    return 0.5 * q + 0.25 * n2 * n2;
  };
  p.gradient = [sign_of](const Vector& x) {
    const double n2 = dot(x, x);
    Vector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = sign_of(i) * x[i] + n2 * x[i];
    return g;
  };
  p.hessian = [sign_of, dim](const Vector& x) {
    const double n2 = dot(x, x);
    SymMatrix h(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        double v = 2.0 * x[static_cast<std::size_t>(i)] *
                   x[static_cast<std::size_t>(j)];
        if (i == j) v += sign_of(static_cast<std::size_t>(i)) + n2;
        h.set(i, j, v);
      }
    return h;
  };
  // ||H(x)-H(y)|| <= 3 (||x||+||y||) ||x-y||, and ||x|| <= 2 sqrt(d) on the
  // box.
  p.lipschitz_L = 12.0 * std::sqrt(static_cast<double>(dim));
  // Along any negative-curvature axis f(r e) = -r^2/2 + r^4/4 >= -1/4, and
  // f >= -||x||^2/2 + ||x||^4/4 in general, so the infimum is exactly -1/4.
  p.f_lower = -0.25;
  p.box = cube(dim, 2.0);
  p.default_x0.assign(static_cast<std::size_t>(dim), 0.0);  // strict saddle
  return p;
}

// log(1 + exp(-z)), stable for large |z|.
double softplus_neg(double z) {
  if (z >= 0.0) return std::log1p(std::exp(-z));
  return -z + std::log1p(std::exp(z));
}

// sigma(-z) = 1 / (1 + exp(z)), stable for large |z|.
double sigmoid_neg(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

struct LogisticData {
  int n = 0;
  int dim = 0;
  std::vector<double> a;  // n x dim, row-major
  std::vector<double> y;  // labels in {-1, +1}
  double loss_lipschitz = 0.0;
};

std::shared_ptr<const LogisticData> make_logistic_data(int dim) {
  auto d = std::make_shared<LogisticData>();
  d->n = kLogisticSamples;
  d->dim = dim;
  Rng rng(kLogisticSeed);
  d->a.resize(static_cast<std::size_t>(d->n) * static_cast<std::size_t>(dim));
  for (auto& v : d->a) v = rng.normal();
  Vector w(static_cast<std::size_t>(dim));
  for (auto& v : w) v = rng.normal();
  d->y.resize(static_cast<std::size_t>(d->n));
  for (int j = 0; j < d->n; ++j) {
    double z = 0.0;
    for (int i = 0; i < dim; ++i)
      z += d->a[static_cast<std::size_t>(j * dim + i)] *
           w[static_cast<std::size_t>(i)];
    z += 0.5 * rng.normal();
    d->y[static_cast<std::size_t>(j)] = (z >= 0.0) ? 1.0 : -1.0;
  }
  // |d^3/dz^3 log(1+e^-z)| <= 1/(6 sqrt 3); the loss Hessian Lipschitz
  // constant is the mean of ||a_j||^3 times that.
  const double third = 1.0 / (6.0 * std::sqrt(3.0));
  double sum = 0.0;
  for (int j = 0; j < d->n; ++j) {
    double n2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double v = d->a[static_cast<std::size_t>(j * dim + i)];
      n2 += v * v;
    }
    sum += std::pow(n2, 1.5);
  }
  d->loss_lipschitz = third * sum / d->n;
  return d;
}

Problem make_logistic_nonconvex(int dim) {
  auto data = make_logistic_data(dim);
  const int n = data->n;

  auto margin = [data](int j, const Vector& x) {
    double z = 0.0;
    for (int i = 0; i < data->dim; ++i)
      z += data->a[static_cast<std::size_t>(j * data->dim + i)] *
           x[static_cast<std::size_t>(i)];
    return data->y[static_cast<std::size_t>(j)] * z;
  };
  auto comp_value = [data, margin](int j, const Vector& x) {
    return softplus_neg(margin(j, x));
  };
  auto comp_gradient = [data, margin](int j, const Vector& x) {
    const double w = sigmoid_neg(margin(j, x));
    Vector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = -w * data->y[static_cast<std::size_t>(j)] *
             data->a[static_cast<std::size_t>(j) * x.size() + i];
    return g;
  };
  auto comp_hessian = [data, margin](int j, const Vector& x) {
    const double w = sigmoid_neg(margin(j, x));
    const double coef = w * (1.0 - w);
    const int d = data->dim;
    SymMatrix h(d);
    for (int r = 0; r < d; ++r)
      for (int c = r; c < d; ++c)
        h.set(r, c,
              coef * data->a[static_cast<std::size_t>(j * d + r)] *
                  data->a[static_cast<std::size_t>(j * d + c)]);
    return h;
  };

  // Nonconvex separable regularizer sum_i x_i^2 / (1 + x_i^2).
  auto reg_value = [](const Vector& x) {
    double r = 0.0;
    for (double xi : x) r += xi * xi / (1.0 + xi * xi);
    return r;
  };
  auto reg_gradient = [](const Vector& x) {
    Vector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = 1.0 + x[i] * x[i];
      g[i] = 2.0 * x[i] / (d * d);
    }
    return g;
  };
  auto reg_hessian = [dim](const Vector& x) {
    Vector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = 1.0 + x[i] * x[i];
      d[i] = (2.0 - 6.0 * x[i] * x[i]) / (t * t * t);
    }
    (void)dim;
    return SymMatrix::diagonal(d);
  };

  Problem p;
  p.name = "logistic_nonconvex";
  p.dim = dim;
  p.value = [n, comp_value, reg_value](const Vector& x) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += comp_value(j, x);
    return s / n + reg_value(x);
  };
  p.gradient = [n, comp_gradient, reg_gradient](const Vector& x) {
    Vector g = reg_gradient(x);
    for (int j = 0; j < n; ++j) {
      Vector cj = comp_gradient(j, x);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += cj[i] / n;
    }
    return g;
  };
  p.hessian = [n, dim, comp_hessian, reg_hessian](const Vector& x) {
    SymMatrix h = reg_hessian(x);
    for (int j = 0; j < n; ++j) h = h + comp_hessian(j, x).scaled_by(1.0 / n);
    (void)dim;
    return h;
  };
  // Loss part plus the separable regularizer, whose per-coordinate third
  // derivative 24 x (x^2 - 1) / (1 + x^2)^4 is below 5 everywhere.
  p.lipschitz_L = data->loss_lipschitz + 5.0;
  p.f_lower = 0.0;  // both terms are nonnegative
  p.box = cube(dim, 10.0);
  p.default_x0.assign(static_cast<std::size_t>(dim), 0.0);
  p.dataset_seed = kLogisticSeed;

  FiniteSum fs;
  fs.n = n;
  fs.component_value = comp_value;
  fs.component_gradient = comp_gradient;
  fs.component_hessian = comp_hessian;
  fs.base_value = reg_value;
  fs.base_gradient = reg_gradient;
  fs.base_hessian = reg_hessian;
  p.finite_sum = std::move(fs);
  return p;
}

}  // namespace

bool Box::contains(const Vector& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;
  return true;
}

EvalResult eval_all(const Problem& p, const Vector& x) {
  check_point(p, x);
  return EvalResult{p.value(x), p.gradient(x), p.hessian(x)};
}

std::pair<double, double> finite_diff_check(const Problem& p, const Vector& x,
                                            double h) {
  check_point(p, x);
  const int d = p.dim;
  for (int i = 0; i < d; ++i) {
    Vector xp = x, xm = x;
    xp[static_cast<std::size_t>(i)] += h;
    xm[static_cast<std::size_t>(i)] -= h;
    if (!p.box.contains(xp) || !p.box.contains(xm))
      throw OutOfDomain("finite_diff_check: x +- h e_i leaves the box");
  }

  const Vector g = p.gradient(x);
  const SymMatrix hess = p.hessian(x);

  double g_scale = 0.0;
  for (double v : g) g_scale = std::max(g_scale, std::abs(v));
  double grad_err = 0.0;
  for (int i = 0; i < d; ++i) {
    Vector xp = x, xm = x;
    xp[static_cast<std::size_t>(i)] += h;
    xm[static_cast<std::size_t>(i)] -= h;
    const double fd = (p.value(xp) - p.value(xm)) / (2.0 * h);
    grad_err = std::max(grad_err, std::abs(fd - g[static_cast<std::size_t>(i)]));
  }
  grad_err /= 1.0 + g_scale;

  double h_scale = hess.max_abs();
  double hess_err = 0.0;
  std::vector<Vector> cols(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    Vector xp = x, xm = x;
    xp[static_cast<std::size_t>(j)] += h;
    xm[static_cast<std::size_t>(j)] -= h;
    const Vector gp = p.gradient(xp);
    const Vector gm = p.gradient(xm);
    cols[static_cast<std::size_t>(j)] = scaled(sub(gp, gm), 1.0 / (2.0 * h));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double fd = 0.5 * (cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] +
                               cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      hess_err = std::max(hess_err, std::abs(fd - hess(i, j)));
    }
  hess_err /= 1.0 + h_scale;

  return {grad_err, hess_err};
}

Problem builtin_problem(const std::string& name, int dim) {
  if (dim < 1) throw UnknownProblem("problem dimension must be positive");
  if (dim > kMaxDim)
    throw UnknownProblem("problem dimension exceeds the cap of " +
                         std::to_string(kMaxDim));
  if (name == "quadratic") return make_quadratic(dim);
  if (name == "double_well") return make_double_well(dim);
  if (name == "rosenbrock") return make_rosenbrock(dim);
  if (name == "saddle_quartic") return make_saddle_quartic(dim);
  if (name == "logistic_nonconvex") return make_logistic_nonconvex(dim);
  throw UnknownProblem("unknown built-in problem '" + name + "'");
}

}  // namespace cubicreg
