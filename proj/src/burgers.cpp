#include "lsa/burgers.hpp"

#include <cstdio>
#include <numbers>
#include <ostream>

namespace lsa {

FieldState initial_state(const std::vector<std::vector<WaveTerm>>& components,
                         int grid_size, double domain_length) {
  int dim = static_cast<int>(components.size());
  if (dim < 1) throw std::invalid_argument("initial_state: no components");
  FieldState s(grid_size, domain_length, dim);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int p = 0; p < grid_size; ++p) {
    double x = domain_length * p / grid_size;
    for (int c = 0; c < dim; ++c) {
      double v = 0;
      for (const WaveTerm& t : components[c]) {
        switch (t.kind) {
          case WaveTerm::Kind::Sin:
            v += t.amplitude * std::sin(two_pi * t.wavenumber * x / domain_length +
                                        t.phase);
            break;
          case WaveTerm::Kind::Cos:
            v += t.amplitude * std::cos(two_pi * t.wavenumber * x / domain_length +
                                        t.phase);
            break;
          case WaveTerm::Kind::Const: v += t.amplitude; break;
        }
      }
      s.at(p, c) = v;
    }
  }
  return s;
}

void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj) {
  if (traj.states.empty()) return;
  int dim = traj.states.front().dim;
  os << "t,x";
  for (int c = 0; c < dim; ++c) os << ",u" << c + 1;
  os << "\n";
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (size_t s = 0; s < traj.states.size(); ++s) {
    const FieldState& st = traj.states[s];
    for (int p = 0; p < st.grid_size; ++p) {
      put(traj.times[s]);
      os << ",";
      put(st.domain_length * p / st.grid_size);
      for (int c = 0; c < dim; ++c) {
        os << ",";
        put(st.at(p, c));
      }
      os << "\n";
    }
  }
}

}  // namespace lsa
