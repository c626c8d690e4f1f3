/*
 * Copyright 2026 the lcpi authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LCPI_RNG_HPP_
#define LCPI_RNG_HPP_

#include <array>
#include <cstdint>

namespace lcpi {

// Deterministic random stream addressed by (seed, stream). The engine is
// xoshiro256++ (Blackman & Vigna), state-initialized with a splitmix64
// chain keyed on both seed and stream, so distinct stream ids give
// statistically independent sequences for the same seed. All draws are
// derived from raw 64-bit outputs only (uniforms from the top 53 bits,
// normals by AS 241 inverse CDF), never from libstdc++ distributions,
// which keeps sequences identical across platforms and toolchains.
//
// Identical (seed, stream) always reproduces the identical sequence.
// Instances are cheap to copy; a copy continues the sequence from the
// point of the copy. Not thread-safe: one owner per instance.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on [lo, hi); degenerate lo == hi returns lo.
  double uniform(double lo, double hi);

  // Standard normal draw via inverse CDF; the underlying uniform is
  // mapped into the open interval (0, 1) so the quantile is finite.
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace lcpi

#endif  // LCPI_RNG_HPP_
