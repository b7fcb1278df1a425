// adaptkit/base/rng.cc

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

#include "adaptkit/base/rng.h"

#include "adaptkit/base/io.h"

namespace adaptkit {

uint64_t DeriveSeed(uint64_t base, const std::string &stream) {
  uint64_t h = Fnv1a64(stream.data(), stream.size());
  h = Fnv1a64(&base, sizeof(base), h);
  // Zero seeds select mt19937_64's default fallback; avoid the collision.
  return h == 0 ? 0x9e3779b97f4a7c15ULL : h;
}

uint64_t DeriveSeed(uint64_t base, const std::string &stream, uint64_t index) {
  uint64_t h = DeriveSeed(base, stream);
  h = Fnv1a64(&index, sizeof(index), h);
  return h == 0 ? 0x9e3779b97f4a7c15ULL : h;
}

}  // namespace adaptkit
