// adaptkit/base/rng.h

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAPTKIT_BASE_RNG_H_
#define ADAPTKIT_BASE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace adaptkit {

// Deterministic random source.  std::normal_distribution is
// implementation-defined, so the Gaussian path is a fixed Box-Muller on top
// of mt19937_64; outputs are reproducible for a given seed independent of
// the standard library version.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform() {
    // 53-bit mantissa draw.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Integer in [0, n).
  uint64_t Index(uint64_t n) {
    // Rejection-free modulo is biased for huge n; fine for index use here.
    return engine_() % n;
  }

  double Gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = Uniform();
    double u2 = Uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  uint64_t Raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives a child seed from a base seed and a stream label, so independent
// random streams (class means, speaker offsets, per-epoch dropout, ...) can
// be drawn from one named seed without order coupling.
uint64_t DeriveSeed(uint64_t base, const std::string &stream);
uint64_t DeriveSeed(uint64_t base, const std::string &stream, uint64_t index);

}  // namespace adaptkit

#endif  // ADAPTKIT_BASE_RNG_H_
