// adaptkit/feat/wav.cc

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

#include "adaptkit/feat/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "adaptkit/base/error.h"
#include "adaptkit/base/io.h"

namespace adaptkit {

WavData ReadWav(const std::string &path) {
  std::vector<uint8_t> buf = ReadFileBytes(path);
  ByteReader r(buf);
  char riff[4], wave[4];
  r.GetBytes(riff, 4);
  r.GetU32();  // riff chunk size, unchecked against actual file length
  r.GetBytes(wave, 4);
  if (r.Truncated() || std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(wave, "WAVE", 4) != 0)
    throw Error(Strs("not a RIFF/WAVE file: ", path));

  WavData wav;
  bool have_fmt = false;
  while (r.Remaining() >= 8) {
    char chunk_id[4];
    r.GetBytes(chunk_id, 4);
    uint32_t chunk_size = r.GetU32();
    if (r.Truncated()) break;
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw Error(Strs("malformed fmt chunk in ", path));
      uint32_t start_remaining = static_cast<uint32_t>(r.Remaining());
      uint16_t format, channels, block_align, bits;
      uint32_t sr, byte_rate;
      uint8_t tmp2[2];
      r.GetBytes(tmp2, 2); format = static_cast<uint16_t>(tmp2[0] | (tmp2[1] << 8));
      r.GetBytes(tmp2, 2); channels = static_cast<uint16_t>(tmp2[0] | (tmp2[1] << 8));
      sr = r.GetU32();
      byte_rate = r.GetU32();
      (void)byte_rate;
      r.GetBytes(tmp2, 2); block_align = static_cast<uint16_t>(tmp2[0] | (tmp2[1] << 8));
      (void)block_align;
      r.GetBytes(tmp2, 2); bits = static_cast<uint16_t>(tmp2[0] | (tmp2[1] << 8));
      if (format != 1) throw Error(Strs("only PCM wav supported, format=", format, " in ", path));
      if (channels != 1) throw Error(Strs("only mono wav supported, channels=", channels, " in ", path));
      if (bits != 16) throw Error(Strs("only 16-bit wav supported, bits=", bits, " in ", path));
      wav.sample_rate = static_cast<int>(sr);
      have_fmt = true;
      uint32_t consumed = start_remaining - static_cast<uint32_t>(r.Remaining());
      for (uint32_t i = consumed; i < chunk_size; ++i) {
        uint8_t skip;
        r.GetBytes(&skip, 1);
      }
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      if (!have_fmt) throw Error(Strs("data chunk before fmt chunk in ", path));
      if (chunk_size > r.Remaining())
        throw Error(Strs("truncated data chunk in ", path));
      size_t num_samples = chunk_size / 2;
      wav.samples.resize(num_samples);
      for (size_t i = 0; i < num_samples; ++i) {
        uint8_t b[2];
        r.GetBytes(b, 2);
        int16_t s = static_cast<int16_t>(b[0] | (b[1] << 8));
        wav.samples[i] = static_cast<double>(s) / 32768.0;
      }
      return wav;
    } else {
      // Skip unknown chunks (LIST, fact, ...), padded to even size.
      uint32_t skip = chunk_size + (chunk_size & 1);
      for (uint32_t i = 0; i < skip && !r.Truncated(); ++i) {
        uint8_t b;
        r.GetBytes(&b, 1);
      }
    }
  }
  throw Error(Strs("no data chunk found in ", path));
}

void WriteWav(const std::string &path, const std::vector<double> &samples, int sample_rate) {
  ADAPTKIT_CHECK(sample_rate > 0, "sample rate must be positive");
  ByteWriter w;
  uint32_t data_bytes = static_cast<uint32_t>(samples.size() * 2);
  w.PutBytes("RIFF", 4);
  w.PutU32(36 + data_bytes);
  w.PutBytes("WAVE", 4);
  w.PutBytes("fmt ", 4);
  w.PutU32(16);
  auto put_u16 = [&w](uint16_t v) {
    uint8_t b[2] = {static_cast<uint8_t>(v & 0xff), static_cast<uint8_t>(v >> 8)};
    w.PutBytes(b, 2);
  };
  put_u16(1);   // PCM
  put_u16(1);   // mono
  w.PutU32(static_cast<uint32_t>(sample_rate));
  w.PutU32(static_cast<uint32_t>(sample_rate) * 2);  // byte rate
  put_u16(2);   // block align
  put_u16(16);  // bits per sample
  w.PutBytes("data", 4);
  w.PutU32(data_bytes);
  for (double s : samples) {
    double clipped = std::clamp(s, -1.0, 32767.0 / 32768.0);
    int16_t q = static_cast<int16_t>(std::lrint(clipped * 32768.0));
    uint8_t b[2] = {static_cast<uint8_t>(q & 0xff), static_cast<uint8_t>((q >> 8) & 0xff)};
    w.PutBytes(b, 2);
  }
  WriteFileAtomic(path, w.data());
}

}  // namespace adaptkit
