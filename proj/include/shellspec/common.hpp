#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace shellspec {

using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using MatXc = Eigen::MatrixXcd;
using MatXd = Eigen::MatrixXd;
using VecXc = Eigen::VectorXcd;
using VecXd = Eigen::VectorXd;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when an input (mesh file, shape parameters, config) is invalid.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical procedure cannot certify its result
/// (bracket failure, ill-conditioning past the reporting threshold).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floating-point formatting used by every CSV/JSON emitter: 17 significant
/// digits, enough for bit-exact round trips.
inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Worker count: SHELLSPEC_THREADS if set, hardware concurrency otherwise.
inline unsigned thread_count() {
  if (const char* env = std::getenv("SHELLSPEC_THREADS")) {
    long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Parallel loop over [0, n). Each index is processed exactly once and
/// writes only to its own outputs, so the result is identical for any
/// worker count. Static block partition, no work stealing.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace shellspec
