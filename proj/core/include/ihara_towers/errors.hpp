#pragma once

#include <stdexcept>
#include <string>

namespace ihara_towers {

/// The input lies outside the supported tower setting: vanishing
/// Euler characteristic, a disconnected base, or a disconnected tower.
class HypothesisError : public std::runtime_error {
 public:
  enum class Kind { kZeroEulerCharacteristic, kDisconnectedBase, kMonodromy, kRootOfUnity };

  HypothesisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured resource bound was hit (p-adic precision cap, integer factoring
/// budget, IHARA_TOWERS_MAX_BITS).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ihara_towers
