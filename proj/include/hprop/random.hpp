#pragma once

#include <cstdint>
#include <initializer_list>

namespace hprop {

/// Counter-based generator: draw k is a pure function of (key, k), so any
/// subset of draws can be evaluated in any order. Output is the SplitMix64
/// finalizer applied to key + (k + 1) * golden-gamma.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr unsigned kUniformBits = 53;
  static constexpr std::uint64_t kUniformOne = std::uint64_t{1} << kUniformBits;

  static constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  explicit constexpr CounterRng(std::uint64_t seed) noexcept : key_(finalize(seed + kGamma)) {}

  constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
    return finalize(key_ + (index + 1) * kGamma);
  }

  /// Integer in [0, 2^53); divide by 2^53 for a uniform on [0, 1).
  constexpr std::uint64_t uniform53(std::uint64_t index) const noexcept { return bits(index) >> 11; }

  static constexpr double to_unit(std::uint64_t u53) noexcept {
    return static_cast<double>(u53) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

/// Deterministic seed for a sub-stream, e.g. derive_seed(master, {n, trial}).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = CounterRng::finalize(master ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t part : path) {
    h = CounterRng::finalize(h + CounterRng::kGamma + CounterRng::finalize(part + 0xbb67ae8584caa73bULL));
  }
  return h;
}

}  // namespace hprop
