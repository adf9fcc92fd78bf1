// Copyright 2026 The Mpemba Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPEMBA_RNG_HPP
#define MPEMBA_RNG_HPP

#include <cstdint>
#include <random>

namespace mpemba {

/// Deterministic per-realization random stream.
///
/// A stream is a pure function of (master_seed, realization_index): the same
/// pair always reproduces the same draw sequence, independent of thread
/// scheduling or how many other streams exist. Distribution transforms are
/// implemented on top of the raw engine output so results do not depend on
/// the standard library's (implementation-defined) distribution algorithms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed,
                     std::uint64_t realization_index = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in {0, ..., n-1}; n must be nonzero.
  std::uint64_t uniform_index(std::uint64_t n);
  /// True with probability p. Always consumes exactly one draw.
  bool bernoulli(double p);
  /// Standard normal deviate (Box-Muller).
  double normal();

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t realization_index() const { return realization_index_; }
  std::uint64_t draw_count() const { return draws_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t realization_index_;
  std::uint64_t draws_ = 0;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer used to derive per-realization seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace mpemba

#endif
