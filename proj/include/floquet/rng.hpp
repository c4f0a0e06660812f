#pragma once

#include <cstdint>
#include <initializer_list>

namespace floquet {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64. One instance per independent task.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t x, int k) {
      return (x << k) | (x >> (64 - k));
    };
    std::uint64_t r = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return r;
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free for our purposes; bias is ~n/2^64.
    return next() % n;
  }

 private:
  std::uint64_t state_[4];
};

// Counter-based substream derivation: results depend only on the ids, never
// on iteration order or worker count.
inline std::uint64_t derive_stream(std::uint64_t master,
                                   std::initializer_list<std::uint64_t> ids) {
  std::uint64_t s = master ^ 0xd1b54a32d192ed03ull;
  std::uint64_t h = splitmix64(s);
  for (auto id : ids) {
    s = h ^ (id + 0x9e3779b97f4a7c15ull);
    h = splitmix64(s);
  }
  return h;
}

// One Bernoulli draw addressed by (stream ids...) -- used for per-(step,
// site, type) error sampling so that sampling is order independent.
inline bool counter_bernoulli(std::uint64_t master,
                              std::initializer_list<std::uint64_t> ids,
                              double p) {
  std::uint64_t h = derive_stream(master, ids);
  return double(h >> 11) * 0x1.0p-53 < p;
}

}  // namespace floquet
