#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>

namespace suq2 {

enum class Mode { exact, numeric };

// One q per process. sigma = sign of Re q; it is a convention knob only when
// Re q = 0. In numeric mode q0 is the concrete value and v is reconstructed as
// sigma*q0/|q0|, so that q = sigma*r*v holds with no branch-cut surprises.
struct Session {
  int sigma = +1;
  Mode mode = Mode::exact;
  std::complex<double> q0{0.0, 0.0};

  double r0() const { return std::abs(q0); }
  std::complex<double> v0() const {
    return std::complex<double>(double(sigma), 0.0) * q0 / std::abs(q0);
  }
  std::complex<double> zeta0() const { return v0() * v0(); }
};

inline Session& session() {
  static Session s;
  return s;
}

inline int sigma_of(std::complex<double> q0) {
  if (q0.real() > 0) return +1;
  if (q0.real() < 0) return -1;
  return q0.imag() > 0 ? +1 : -1; // principal branch at Re q = 0
}

inline void set_exact_mode(int sigma = +1) {
  if (sigma != +1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
  session() = Session{sigma, Mode::exact, {0.0, 0.0}};
}

// sigma is derived from q0; an explicit value may only confirm it.
inline void set_numeric_mode(std::complex<double> q0, int sigma = 0) {
  double a = std::abs(q0);
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("need 0 < |q0| < 1");
  int s = sigma_of(q0);
  if (sigma != 0 && sigma != s)
    throw std::invalid_argument("sigma inconsistent with q0");
  session() = Session{s, Mode::numeric, q0};
}

} // namespace suq2
