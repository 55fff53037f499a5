// SPDX-License-Identifier: Apache-2.0
//
// ris-pkg: simulation of physical-layer key generation over RIS-reconfigurable channels.

#include "rispkg/rng.hpp"

#include <cmath>

namespace rispkg {

std::uint64_t mix_u64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), gen_(mix_u64(seed)) {}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t stream_id) {
  return RandomStream(mix_u64(master_seed ^ mix_u64(stream_id + 0x51ED2701)));
}

RandomStream RandomStream::substream(std::uint64_t stream_id) const {
  return derive(seed_, stream_id);
}

std::uint64_t RandomStream::next_u64() { return gen_(); }

bool RandomStream::next_bit() { return (gen_() >> 63) != 0; }

double RandomStream::uniform() {
  // 53-bit mantissa; result in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  // Rejection-free modulo is fine here; n is small in all call sites.
  return gen_() % n;
}

double RandomStream::gaussian() {
  // Box-Muller. u is kept away from zero so the log is finite.
  double u = 0.0;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
}

Complex RandomStream::cgaussian() {
  double u = 0.0;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double v = uniform();
  const double r = std::sqrt(-std::log(u));  // E|z|^2 = 1
  return Complex(r * std::cos(2.0 * kPi * v), r * std::sin(2.0 * kPi * v));
}

CVector RandomStream::cgaussian_vector(Index n, double var) {
  CVector out(n);
  const double s = std::sqrt(var);
  for (Index i = 0; i < n; ++i) out[i] = s * cgaussian();
  return out;
}

}  // namespace rispkg
