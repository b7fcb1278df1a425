// adaptkit/base/io.h

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

#ifndef ADAPTKIT_BASE_IO_H_
#define ADAPTKIT_BASE_IO_H_

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace adaptkit {

// Little-endian byte buffer codec used by the feature archive and the model
// container.  All multi-byte fields in both formats are little-endian; doubles
// and floats are raw IEEE-754 bit patterns, so round trips are bit-exact.
class ByteWriter {
 public:
  void PutU32(uint32_t v);
  void PutU64(uint64_t v);
  void PutI32(int32_t v) { PutU32(static_cast<uint32_t>(v)); }
  void PutF32(float v);
  void PutF64(double v);
  void PutBytes(const void *data, size_t n);
  void PutString(const std::string &s);  // u32 length + bytes

  const std::vector<uint8_t> &data() const { return data_; }
  std::vector<uint8_t> &&Take() { return std::move(data_); }

 private:
  std::vector<uint8_t> data_;
};

// Reads from a byte span; Truncated() is true once a read ran past the end.
// Callers translate that into format-specific truncation errors.
class ByteReader {
 public:
  ByteReader(const uint8_t *data, size_t size) : data_(data), size_(size) {}
  explicit ByteReader(const std::vector<uint8_t> &buf)
      : ByteReader(buf.data(), buf.size()) {}

  uint32_t GetU32();
  uint64_t GetU64();
  int32_t GetI32() { return static_cast<int32_t>(GetU32()); }
  float GetF32();
  double GetF64();
  std::string GetString();
  void GetBytes(void *out, size_t n);

  size_t Remaining() const { return size_ - pos_; }
  bool Truncated() const { return truncated_; }

 private:
  const uint8_t *data_;
  size_t size_;
  size_t pos_ = 0;
  bool truncated_ = false;
};

// Whole-file helpers.  WriteFileAtomic writes to "<path>.tmp.<pid>" and
// renames, so partially written outputs never appear under the final name.
std::vector<uint8_t> ReadFileBytes(const std::string &path);
void WriteFileAtomic(const std::string &path, const void *data, size_t size);
void WriteFileAtomic(const std::string &path, const std::vector<uint8_t> &buf);
void WriteTextFileAtomic(const std::string &path, const std::string &text);

// FNV-1a 64-bit hash; used for model fingerprints and container checksums.
uint64_t Fnv1a64(const void *data, size_t size, uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace adaptkit

#endif  // ADAPTKIT_BASE_IO_H_
