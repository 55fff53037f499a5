// SPDX-License-Identifier: Apache-2.0
//
// ris-pkg: simulation of physical-layer key generation over RIS-reconfigurable channels.

#include "rispkg/ris.hpp"

#include <cmath>
#include <stdexcept>

namespace rispkg {

namespace {

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

void RisConfig::validate() const {
  if (phases.size() != amplitudes.size() || phases.size() < 1)
    throw std::invalid_argument("RisConfig: phase/amplitude length mismatch or empty");
  for (Index i = 0; i < size(); ++i) {
    if (amplitudes[i] < 0.0 || amplitudes[i] > 1.0)
      throw std::invalid_argument("RisConfig: |coefficient| must be <= 1");
    switch (mode) {
      case RisMode::ContinuousPhase:
        if (!near(amplitudes[i], 1.0)) throw std::invalid_argument("RisConfig: continuous mode requires unit amplitudes");
        break;
      case RisMode::BinaryPhase:
        if (!near(amplitudes[i], 1.0)) throw std::invalid_argument("RisConfig: binary mode requires unit amplitudes");
        if (!near(phases[i], 0.0) && !near(std::abs(phases[i]), kPi))
          throw std::invalid_argument("RisConfig: binary mode requires phases in {0, pi}");
        break;
      case RisMode::OnOff:
        if (!near(amplitudes[i], 0.0) && !near(amplitudes[i], 1.0))
          throw std::invalid_argument("RisConfig: on-off mode requires amplitudes in {0, 1}");
        if (!near(phases[i], 0.0)) throw std::invalid_argument("RisConfig: on-off mode pins phases to 0");
        break;
    }
  }
}

CVector reflection_coeffs(const RisConfig& cfg) {
  CVector c(cfg.size());
  for (Index i = 0; i < cfg.size(); ++i)
    c[i] = cfg.amplitudes[i] * Complex(std::cos(cfg.phases[i]), std::sin(cfg.phases[i]));
  return c;
}

RisConfig all_on_config(Index n) {
  RisConfig cfg;
  cfg.mode = RisMode::ContinuousPhase;
  cfg.phases = RVector::Zero(n);
  cfg.amplitudes = RVector::Ones(n);
  return cfg;
}

RisConfig all_off_config(Index n) {
  RisConfig cfg;
  cfg.mode = RisMode::OnOff;
  cfg.phases = RVector::Zero(n);
  cfg.amplitudes = RVector::Zero(n);
  return cfg;
}

RisConfig continuous_config(RVector phases) {
  RisConfig cfg;
  cfg.mode = RisMode::ContinuousPhase;
  cfg.amplitudes = RVector::Ones(phases.size());
  cfg.phases = std::move(phases);
  return cfg;
}

RisConfig binary_config(const RVector& phases) {
  RisConfig cfg;
  cfg.mode = RisMode::BinaryPhase;
  cfg.phases = phases;
  cfg.amplitudes = RVector::Ones(phases.size());
  cfg.validate();
  return cfg;
}

RisConfig onoff_config(const RVector& amplitudes) {
  RisConfig cfg;
  cfg.mode = RisMode::OnOff;
  cfg.phases = RVector::Zero(amplitudes.size());
  cfg.amplitudes = amplitudes;
  cfg.validate();
  return cfg;
}

RisConfig random_config(RisMode mode, Index n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("random_config: n must be >= 1");
  RisConfig cfg;
  cfg.mode = mode;
  cfg.phases = RVector::Zero(n);
  cfg.amplitudes = RVector::Ones(n);
  switch (mode) {
    case RisMode::ContinuousPhase:
      for (Index i = 0; i < n; ++i) cfg.phases[i] = rng.uniform(-kPi, kPi);
      break;
    case RisMode::BinaryPhase:
      for (Index i = 0; i < n; ++i) cfg.phases[i] = rng.next_bit() ? kPi : 0.0;
      break;
    case RisMode::OnOff:
      for (Index i = 0; i < n; ++i) cfg.amplitudes[i] = rng.next_bit() ? 1.0 : 0.0;
      break;
  }
  return cfg;
}

void RisSchedule::validate() const {
  if (block_len < 1) throw std::invalid_argument("RisSchedule: block_len must be >= 1");
  if (n_elements < 1) throw std::invalid_argument("RisSchedule: n_elements must be >= 1");
  if (kind == ScheduleKind::Hold) held.validate();
}

RisConfig schedule_config(const RisSchedule& schedule, std::int64_t probe_index,
                          Direction direction, std::uint64_t seed) {
  if (probe_index < 0) throw std::invalid_argument("schedule_config: probe_index must be >= 0");
  schedule.validate();
  const std::int64_t block = probe_index / schedule.block_len;
  switch (schedule.kind) {
    case ScheduleKind::Hold:
      return schedule.held;
    case ScheduleKind::RandomPerBlock: {
      RandomStream rng = RandomStream::derive(seed, static_cast<std::uint64_t>(block));
      return random_config(schedule.mode, schedule.n_elements, rng);
    }
    case ScheduleKind::AlternatingAllOnOff:
      return (block % 2 == 0) ? onoff_config(RVector::Ones(schedule.n_elements))
                              : all_off_config(schedule.n_elements);
    case ScheduleKind::AttackerPerDirection: {
      const std::uint64_t id = static_cast<std::uint64_t>(probe_index) * 2u +
                               (direction == Direction::Forward ? 0u : 1u);
      RandomStream rng = RandomStream::derive(seed, id);
      return random_config(schedule.mode, schedule.n_elements, rng);
    }
  }
  throw std::logic_error("schedule_config: unreachable");
}

}  // namespace rispkg
