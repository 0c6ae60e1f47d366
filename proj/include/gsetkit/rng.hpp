#ifndef GSETKIT_RNG_HPP
#define GSETKIT_RNG_HPP

#include <cstdint>
#include <span>
#include <utility>

// Fixed, portable random streams. Standard-library distributions are
// implementation-defined, so everything that feeds a reproducible result
// (torus weights, solver trajectories, trial seeds) goes through here.
//
//   splitmix64   Steele, Lea & Flood (2014) finalizer, used for seeding and
//                for mixing (master_seed, trial_index) into trial seeds.
//   xoshiro256** Blackman & Vigna (2018), the working generator.
//   uniform_below  Lemire's multiply-shift with rejection (unbiased).
//   uniform01    top 53 bits scaled by 2^-53, in [0, 1).

namespace gsetkit {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(state_);
  }

 private:
  std::uint64_t state_;
};

// seed_i = splitmix64_mix(master_seed + golden_gamma * (trial_index + 1)),
// i.e. the (trial_index + 1)-th output of a SplitMix64 stream seeded with
// master_seed. Independent of worker count and execution order.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                          std::uint64_t trial_index) noexcept {
  return splitmix64_mix(master_seed + 0x9e3779b97f4a7c15ULL * (trial_index + 1));
}

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  // State words are the first four outputs of SplitMix64(seed ^ stream tag).
  explicit constexpr Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0) noexcept {
    SplitMix64 sm(seed ^ splitmix64_mix(stream + 0x243f6a8885a308d3ULL));
    for (auto& word : s_) word = sm.next();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4]{};
};

// Fisher-Yates, walking from the back.
template <typename T>
void shuffle(std::span<T> values, Xoshiro256& rng) noexcept {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace gsetkit

#endif  // GSETKIT_RNG_HPP
