// SPDX-License-Identifier: Apache-2.0
//
// ris-pkg: simulation of physical-layer key generation over RIS-reconfigurable channels.

#pragma once

#include <cstdint>
#include <random>

#include "rispkg/types.hpp"

namespace rispkg {

/// Seeded random stream with a fixed, library-independent Gaussian sampler.
///
/// All Monte-Carlo code draws from RandomStream rather than <random>
/// distributions so that results are reproducible across standard-library
/// implementations. Independent substreams are derived by hashing
/// (seed, stream_id); trials use substream ids so they can run in any order
/// or concurrently without changing the output.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Substream for (master seed, stream id); statistically independent of the
  /// parent and of other ids.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t stream_id);
  RandomStream substream(std::uint64_t stream_id) const;

  std::uint64_t next_u64();
  bool next_bit();

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer on [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
  double gaussian();
  /// Circularly-symmetric complex Gaussian, unit variance: E|z|^2 = 1.
  Complex cgaussian();

  /// Vector of i.i.d. CN(0, var) entries.
  CVector cgaussian_vector(Index n, double var = 1.0);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix_u64(std::uint64_t x);

}  // namespace rispkg
