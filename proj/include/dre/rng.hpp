/*
   Copyright 2026 The drinfeld-euler authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRE_RNG_HPP
#define DRE_RNG_HPP

#include <cstdint>

namespace dre {

// SplitMix64. Every random choice in the library flows from a single
// user-visible seed through this generator, so runs are reproducible
// bit-for-bit across platforms and reimplementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; rejection-free bias is negligible for the
    // tiny n used here but we reject anyway to keep runs well-defined
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // derive an independent child stream
    Rng fork() { return Rng(next() ^ 0xA5A5A5A55A5A5A5AULL); }

  private:
    std::uint64_t state_;
};

}  // namespace dre

#endif
