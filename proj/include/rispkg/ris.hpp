// SPDX-License-Identifier: Apache-2.0
//
// ris-pkg: simulation of physical-layer key generation over RIS-reconfigurable channels.

#pragma once

#include <cstdint>

#include "rispkg/rng.hpp"
#include "rispkg/types.hpp"

namespace rispkg {

/// Reflection-coefficient constraint mode of the surface.
enum class RisMode {
  ContinuousPhase,  // |c_n| = 1, phase anywhere in [-pi, pi)
  BinaryPhase,      // c_n in {1, -1}
  OnOff,            // c_n in {0, 1}
};

/// Per-element reflection state of the surface under one constraint mode.
struct RisConfig {
  RisMode mode = RisMode::ContinuousPhase;
  RVector phases;      // radians in [-pi, pi)
  RVector amplitudes;  // in [0, 1]

  Index size() const { return phases.size(); }
  /// Throws std::invalid_argument when the mode constraints are violated.
  void validate() const;
};

/// c_n = amplitude_n * exp(i * phase_n).
CVector reflection_coeffs(const RisConfig& cfg);

RisConfig all_on_config(Index n);   // continuous mode, zero phases
RisConfig all_off_config(Index n);  // on-off mode, all amplitudes zero
RisConfig continuous_config(RVector phases);
RisConfig binary_config(const RVector& phases);  // phases must be 0 or pi
RisConfig onoff_config(const RVector& amplitudes);

/// Uniform draw within the mode's constraint set. Throws when n < 1.
RisConfig random_config(RisMode mode, Index n, RandomStream& rng);

enum class ScheduleKind {
  Hold,                  // one fixed configuration for the whole session
  RandomPerBlock,        // fresh random config every block_len probes, both directions
  AlternatingAllOnOff,   // all-on on even blocks, all-off on odd blocks
  AttackerPerDirection,  // independent random config per (probe, direction)
};

enum class Direction { Forward, Reverse };

/// Configuration scheduler. Random kinds draw from streams derived from the
/// supplied seed, so the schedule is a pure function of
/// (schedule, probe_index, direction, seed).
struct RisSchedule {
  ScheduleKind kind = ScheduleKind::RandomPerBlock;
  int block_len = 1;                    // L, probes per configuration
  Index n_elements = 1;                 // N
  RisMode mode = RisMode::BinaryPhase;  // mode used by random kinds
  RisConfig held;                       // used by Hold

  void validate() const;
};

RisConfig schedule_config(const RisSchedule& schedule, std::int64_t probe_index,
                          Direction direction, std::uint64_t seed);

}  // namespace rispkg
