#pragma once

#include <gmpxx.h>
#include <string>

namespace suq2 {

using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rat make_rat(long num, long den = 1) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline double to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

inline std::string rat_str(const Rat& x) { return x.get_str(); }

} // namespace suq2
