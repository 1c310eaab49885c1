#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

namespace detail {
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(std::complex<double> x) { return std::abs(x); }
}  // namespace detail

/// Structure-constant tensor over floating scalars, converted exactly from
/// an Algebra. S is double (default) or std::complex<double>.
template <class S>
class TensorAlgebra {
 public:
  explicit TensorAlgebra(const Algebra& a) : dim_(a.dim()) {
    c_.resize(static_cast<size_t>(dim_) * dim_ * dim_);
    size_t p = 0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          std::complex<double> z = a.c(i, j, k).to_complex();
          if constexpr (std::is_same_v<S, double>) {
            if (z.imag() != 0.0)
              throw std::invalid_argument(
                  "TensorAlgebra<double>: algebra has complex structure "
                  "constants; use the complex scalar type");
            c_[p++] = z.real();
          } else {
            c_[p++] = z;
          }
        }
  }

  int dim() const { return dim_; }
  S c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  // z = x * y in the algebra, on raw component spans
  void product(const S* x, const S* y, S* z) const {
    for (int k = 0; k < dim_; ++k) z[k] = S{};
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == S{}) continue;
      for (int j = 0; j < dim_; ++j) {
        S f = x[i] * y[j];
        if (f == S{}) continue;
        for (int k = 0; k < dim_; ++k) {
          S cc = c(i, j, k);
          if (cc != S{}) z[k] += f * cc;
        }
      }
    }
  }

 private:
  int dim_;
  std::vector<S> c_;
};

using FloatAlgebra = TensorAlgebra<double>;
using ComplexFloatAlgebra = TensorAlgebra<std::complex<double>>;

/// Periodic grid of algebra-valued samples: values[point * dim + component].
template <class S>
struct GridState {
  int grid_size = 0;
  double domain_length = 0;
  int dim = 0;
  std::vector<S> values;

  GridState() = default;
  GridState(int n_points, double length, int dimension)
      : grid_size(n_points), domain_length(length), dim(dimension),
        values(static_cast<size_t>(n_points) * dimension) {
    if (n_points < 8)
      throw std::invalid_argument("GridState: need at least 8 grid points");
    if (!(length > 0))
      throw std::invalid_argument("GridState: domain length must be positive");
  }

  double dx() const { return domain_length / grid_size; }
  S& at(int point, int comp) {
    return values[static_cast<size_t>(point) * dim + comp];
  }
  const S& at(int point, int comp) const {
    return values[static_cast<size_t>(point) * dim + comp];
  }
  double max_abs() const {
    double m = 0;
    for (const S& v : values) m = std::max(m, detail::abs_of(v));
    return m;
  }
};

using FieldState = GridState<double>;
using ComplexFieldState = GridState<std::complex<double>>;

struct SimConfig {
  double dt = 0;
  double t_max = 0;
  int output_stride = 1;
};

inline void validate(const SimConfig& cfg, double dx) {
  if (!(cfg.dt > 0) || !(cfg.t_max > 0) || cfg.output_stride < 1)
    throw std::invalid_argument("SimConfig: dt, t_max, stride must be positive");
  if (cfg.dt > 0.2 * dx * dx + 1e-15)
    throw std::invalid_argument("SimConfig: dt exceeds the 0.2*dx^2 stability bound");
}

/// d/dt U = U_xx + 2 U*U_x + (U*(U*U)) - ((U*U)*U), central differences on
/// the periodic grid, algebra products through the tensor.
template <class S>
GridState<S> rhs_general(const TensorAlgebra<S>& alg, const GridState<S>& u) {
  if (alg.dim() != u.dim) throw std::invalid_argument("rhs_general: dim mismatch");
  int np = u.grid_size, d = u.dim;
  double dx = u.dx();
  GridState<S> out(np, u.domain_length, d);
  std::vector<S> ux(d), uu(d), w(d), cub1(d), cub2(d);
  for (int p = 0; p < np; ++p) {
    int prev = p == 0 ? np - 1 : p - 1;
    int next = p == np - 1 ? 0 : p + 1;
    const S* up = &u.values[static_cast<size_t>(p) * d];
    const S* upr = &u.values[static_cast<size_t>(prev) * d];
    const S* unx = &u.values[static_cast<size_t>(next) * d];
    for (int k = 0; k < d; ++k) ux[k] = (unx[k] - upr[k]) / (2 * dx);
    alg.product(up, ux.data(), w.data());          // U * U_x
    alg.product(up, up, uu.data());                // U * U
    alg.product(up, uu.data(), cub1.data());       // U * (U*U)
    alg.product(uu.data(), up, cub2.data());       // (U*U) * U
    for (int k = 0; k < d; ++k)
      out.at(p, k) = (unx[k] - 2.0 * up[k] + upr[k]) / (dx * dx) +
                     2.0 * w[k] + cub1[k] - cub2[k];
  }
  return out;
}

/// Independent assembly of the same right-hand side through the expanded
/// component sums: u^i_t = u^i_xx + 2 sum C^i_{jk} u^j u^k_x
/// + sum (C^i_{ml} C^l_{kj} - C^l_{kj} C^i_{lm}) u^k u^j u^m.
template <class S>
GridState<S> rhs_components(const TensorAlgebra<S>& alg, const GridState<S>& u) {
  if (alg.dim() != u.dim)
    throw std::invalid_argument("rhs_components: dim mismatch");
  int np = u.grid_size, d = u.dim;
  double dx = u.dx();
  // cubic coefficient tensor D[i][k][j][m], contracted over l up front
  std::vector<S> cubic(static_cast<size_t>(d) * d * d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        for (int m = 0; m < d; ++m) {
          S acc{};
          for (int l = 0; l < d; ++l)
            acc += alg.c(m, l, i) * alg.c(k, j, l) -
                   alg.c(k, j, l) * alg.c(l, m, i);
          cubic[((static_cast<size_t>(i) * d + k) * d + j) * d + m] = acc;
        }
  GridState<S> out(np, u.domain_length, d);
  for (int p = 0; p < np; ++p) {
    int prev = p == 0 ? np - 1 : p - 1;
    int next = p == np - 1 ? 0 : p + 1;
    const S* up = &u.values[static_cast<size_t>(p) * d];
    const S* upr = &u.values[static_cast<size_t>(prev) * d];
    const S* unx = &u.values[static_cast<size_t>(next) * d];
    for (int i = 0; i < d; ++i) {
      S quad{};
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          S cjk = alg.c(j, k, i);
          if (cjk == S{}) continue;
          quad += cjk * up[j] * ((unx[k] - upr[k]) / (2 * dx));
        }
      S cub{};
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
          for (int m = 0; m < d; ++m) {
            S dk = cubic[((static_cast<size_t>(i) * d + k) * d + j) * d + m];
            if (dk != S{}) cub += dk * up[k] * up[j] * up[m];
          }
      out.at(p, i) =
          (unx[i] - 2.0 * up[i] + upr[i]) / (dx * dx) + 2.0 * quad + cub;
    }
  }
  return out;
}

/// Hardcoded dimension-2 right-hand side of the expanded system:
/// u1_t = u1_xx + 4 u1 u1_x + 2 u2 u2_x,
/// u2_t = u2_xx + 2 u1 u2_x - u1^2 u2 - u2^3.
template <class S>
GridState<S> rhs_a31(const GridState<S>& u) {
  if (u.dim != 2) throw std::invalid_argument("rhs_a31: needs dim = 2");
  int np = u.grid_size;
  double dx = u.dx();
  GridState<S> out(np, u.domain_length, 2);
  for (int p = 0; p < np; ++p) {
    int prev = p == 0 ? np - 1 : p - 1;
    int next = p == np - 1 ? 0 : p + 1;
    S u1 = u.at(p, 0), u2 = u.at(p, 1);
    S u1x = (u.at(next, 0) - u.at(prev, 0)) / (2 * dx);
    S u2x = (u.at(next, 1) - u.at(prev, 1)) / (2 * dx);
    S u1xx = (u.at(next, 0) - 2.0 * u1 + u.at(prev, 0)) / (dx * dx);
    S u2xx = (u.at(next, 1) - 2.0 * u2 + u.at(prev, 1)) / (dx * dx);
    out.at(p, 0) = u1xx + 4.0 * u1 * u1x + 2.0 * u2 * u2x;
    out.at(p, 1) = u2xx + 2.0 * u1 * u2x - u1 * u1 * u2 - u2 * u2 * u2;
  }
  return out;
}

template <class S>
struct Trajectory {
  std::vector<double> times;
  std::vector<GridState<S>> states;
};

/// Classical fixed-step RK4 (method of lines); samples every output_stride
/// steps (including the initial state); aborts when the field exceeds 1e12.
template <class S>
Trajectory<S> integrate(const TensorAlgebra<S>& alg, const GridState<S>& u0,
                        const SimConfig& cfg) {
  validate(cfg, u0.dx());
  if (alg.dim() != u0.dim) throw std::invalid_argument("integrate: dim mismatch");
  Trajectory<S> traj;
  GridState<S> u = u0;
  long steps = static_cast<long>(std::ceil(cfg.t_max / cfg.dt - 1e-12));
  traj.times.push_back(0.0);
  traj.states.push_back(u);
  auto axpy = [&](GridState<S>& dst, double f, const GridState<S>& src) {
    for (size_t i = 0; i < dst.values.size(); ++i)
      dst.values[i] += f * src.values[i];
  };
  for (long s = 1; s <= steps; ++s) {
    GridState<S> k1 = rhs_general(alg, u);
    GridState<S> mid = u;
    axpy(mid, cfg.dt / 2, k1);
    GridState<S> k2 = rhs_general(alg, mid);
    mid = u;
    axpy(mid, cfg.dt / 2, k2);
    GridState<S> k3 = rhs_general(alg, mid);
    mid = u;
    axpy(mid, cfg.dt, k3);
    GridState<S> k4 = rhs_general(alg, mid);
    axpy(u, cfg.dt / 6, k1);
    axpy(u, cfg.dt / 3, k2);
    axpy(u, cfg.dt / 3, k3);
    axpy(u, cfg.dt / 6, k4);
    if (u.max_abs() > 1e12)
      throw std::runtime_error(
          "integrate: instability detected at t = " + std::to_string(s * cfg.dt) +
          " (|u| > 1e12); reduce dt or the initial amplitude");
    if (s % cfg.output_stride == 0 || s == steps) {
      traj.times.push_back(s * cfg.dt);
      traj.states.push_back(u);
    }
  }
  return traj;
}

// ---- initial conditions and CSV output (real fields) ----

struct WaveTerm {
  enum class Kind { Sin, Cos, Const };
  Kind kind = Kind::Const;
  double amplitude = 0;
  double wavenumber = 0;  // integer mode count over the periodic domain
  double phase = 0;
};

/// u^i(x) = sum of its terms; sin/cos terms use 2*pi*wavenumber*x/L + phase.
FieldState initial_state(const std::vector<std::vector<WaveTerm>>& components,
                         int grid_size, double domain_length);

/// "t,x,u1,...,un" rows, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj);

}  // namespace lsa
