// adaptkit/feat/wav.h

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

#ifndef ADAPTKIT_FEAT_WAV_H_
#define ADAPTKIT_FEAT_WAV_H_

#include <string>
#include <vector>

namespace adaptkit {

struct WavData {
  int sample_rate = 0;
  std::vector<double> samples;  // mono, scaled to [-1, 1)
};

// Mono 16-bit PCM RIFF/WAVE, little-endian.  Anything else is rejected.
WavData ReadWav(const std::string &path);

// Samples are clipped to [-1, 1) and quantized to 16-bit.
void WriteWav(const std::string &path, const std::vector<double> &samples, int sample_rate);

}  // namespace adaptkit

#endif  // ADAPTKIT_FEAT_WAV_H_
