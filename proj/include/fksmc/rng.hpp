#pragma once

#include <cstdint>
#include <random>

namespace fksmc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// A self-contained random stream. Streams are derived, never split: mixing the
// master seed with a salt and up to two indices gives every particle, child and
// resampling event its own reproducible generator, independent of evaluation
// order or thread count.
class RngStream {
 public:
  RngStream() : engine_(0) {}
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derive(std::uint64_t master, std::uint64_t salt,
                          std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= salt * 0xd1342543de82ef95ULL;
    h ^= splitmix64(s);
    s ^= (a + 1) * 0x2545f4914f6cdd1dULL;
    h ^= splitmix64(s);
    s ^= (b + 1) * 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    return RngStream(h);
  }

  double uniform() { return uniform_(engine_); }                  // [0, 1)
  double normal() { return normal_(engine_); }                    // N(0, 1)
  std::uint64_t bits() { return engine_(); }

  bool operator==(const RngStream& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Salts for the stream families used by a run.
namespace stream_salt {
inline constexpr std::uint64_t kInitParticle = 1;   // (master, birth index)
inline constexpr std::uint64_t kChildParticle = 2;  // (master, step, child index)
inline constexpr std::uint64_t kResampleEvent = 3;  // (master, step)
inline constexpr std::uint64_t kExperiment = 4;     // experiment-level draws
}  // namespace stream_salt

}  // namespace fksmc
