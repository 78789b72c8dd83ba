// Copyright 2026 The logfix Authors.
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

#ifndef LOGFIX_UTIL_HPP_
#define LOGFIX_UTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace logfix {

// 64-bit FNV-1a. Used for content-addressed identifiers and token buckets.
std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

// Hex digest of the FNV-1a hash over the given parts, joined with a
// separator byte that cannot occur in source text.
std::string content_id(std::initializer_list<std::string_view> parts);

// SplitMix64 finalizer; derives independent child seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random source. The standard distributions are
// implementation-defined, so everything seeded output depends on is derived
// here from the raw engine bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);
  // Uniform real in [0, 1).
  double uniform();
  double normal(double mean = 0.0, double stddev = 1.0);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::string to_lower(std::string_view text);
std::string to_upper(std::string_view text);
std::string trim(std::string_view text);
// Collapses every whitespace run to one space and trims both ends.
std::string normalize_whitespace(std::string_view text);
std::vector<std::string> split_lines(std::string_view text);
bool is_ident_start(char c);
bool is_ident_char(char c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace logfix

#endif  // LOGFIX_UTIL_HPP_
