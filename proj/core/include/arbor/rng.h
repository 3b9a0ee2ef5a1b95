// Copyright 2026 The Arbor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARBOR_RNG_H_
#define ARBOR_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>

namespace arbor {

// Deterministic pseudo-random stream: xoshiro256** seeded through SplitMix64.
// All derived quantities (bounded integers, unit doubles, shuffles) are
// computed here rather than through <random> distributions so that a given
// seed produces the same values with every standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return Next(); }
  std::uint64_t Next();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01();

  bool Coin() { return (Next() >> 63) != 0; }

  // Fisher-Yates shuffle driven by Below().
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t Mix64(std::uint64_t x);

// Order-sensitive hash of a sequence of words, used to derive independent
// per-replicate seeds from (master seed, tags, indices).
std::uint64_t DeriveSeed(std::initializer_list<std::uint64_t> parts);

// Stable 64-bit FNV-1a hash of a tag string.
std::uint64_t TagHash(std::string_view tag);

}  // namespace arbor

#endif  // ARBOR_RNG_H_
