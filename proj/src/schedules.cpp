#include "fksmc/schedules.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fksmc/errors.hpp"

namespace fksmc {

void ParticleSchedule::validate() const {
  if (total_steps == 0) throw ConfigError("schedule: total_steps must be positive");
  const std::size_t segments = resample_steps.empty() ? 1 : resample_steps.size();
  if (counts.size() != segments) {
    throw ConfigError("schedule: counts has " + std::to_string(counts.size()) +
                      " entries, expected one per segment (" + std::to_string(segments) + ")");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw ConfigError("schedule: counts must be at least 1");
    if (i > 0 && counts[i] > counts[i - 1]) {
      throw ConfigError("schedule: counts must be non-increasing");
    }
  }
  for (std::size_t i = 0; i < resample_steps.size(); ++i) {
    if (resample_steps[i] < 1 || resample_steps[i] > total_steps) {
      throw ConfigError("schedule: resample step " + std::to_string(resample_steps[i]) +
                        " outside [1, " + std::to_string(total_steps) + "]");
    }
    if (i > 0 && resample_steps[i] <= resample_steps[i - 1]) {
      throw ConfigError("schedule: resample steps must be strictly increasing");
    }
  }
}

std::size_t ParticleSchedule::n_at(std::size_t step) const {
  if (step > total_steps) {
    throw std::out_of_range("n_at: step " + std::to_string(step) + " > T=" +
                            std::to_string(total_steps));
  }
  if (step == 0) return final_count();
  for (std::size_t i = 0; i < resample_steps.size(); ++i) {
    if (step <= resample_steps[i]) return counts[i];
  }
  return counts.back();
}

bool ParticleSchedule::is_resample_step(std::size_t step) const {
  return std::binary_search(resample_steps.begin(), resample_steps.end(), step);
}

std::size_t ParticleSchedule::nfe() const {
  std::size_t total = 0;
  for (std::size_t step = 1; step <= total_steps; ++step) total += n_at(step);
  return total;
}

ParticleSchedule ParticleSchedule::uniform(std::size_t count, std::size_t total_steps,
                                           std::vector<std::size_t> resample_steps) {
  ParticleSchedule s;
  s.total_steps = total_steps;
  s.counts.assign(resample_steps.empty() ? 1 : resample_steps.size(), count);
  s.resample_steps = std::move(resample_steps);
  s.validate();
  return s;
}

ParticleSchedule ParticleSchedule::funnel(std::vector<std::size_t> counts,
                                          std::size_t total_steps,
                                          std::vector<std::size_t> resample_steps) {
  ParticleSchedule s;
  s.total_steps = total_steps;
  s.counts = std::move(counts);
  s.resample_steps = std::move(resample_steps);
  s.validate();
  return s;
}

std::size_t n_at(const ParticleSchedule& schedule, std::size_t step) {
  return schedule.n_at(step);
}

std::size_t nfe(const ParticleSchedule& schedule) { return schedule.nfe(); }

std::vector<std::size_t> default_resample_steps() { return {10, 15, 20, 25, 29}; }

std::vector<ParticleSchedule> funnel_sweep_schedules() {
  const std::vector<std::vector<std::size_t>> counts = {
      {8, 8, 8, 8, 8}, {9, 8, 8, 7, 7}, {10, 8, 8, 6, 6}, {12, 10, 6, 4, 4}, {14, 10, 6, 2, 2},
  };
  std::vector<ParticleSchedule> out;
  out.reserve(counts.size());
  for (const auto& c : counts) {
    out.push_back(ParticleSchedule::funnel(c, 30, default_resample_steps()));
  }
  return out;
}

}  // namespace fksmc
