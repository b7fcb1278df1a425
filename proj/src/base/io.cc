// adaptkit/base/io.cc

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

#include "adaptkit/base/io.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "adaptkit/base/error.h"

namespace adaptkit {

void ByteWriter::PutU32(uint32_t v) {
  for (int i = 0; i < 4; ++i) data_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::PutU64(uint64_t v) {
  for (int i = 0; i < 8; ++i) data_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::PutF32(float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  PutU32(bits);
}

void ByteWriter::PutF64(double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  PutU64(bits);
}

void ByteWriter::PutBytes(const void *data, size_t n) {
  const uint8_t *p = static_cast<const uint8_t *>(data);
  data_.insert(data_.end(), p, p + n);
}

void ByteWriter::PutString(const std::string &s) {
  PutU32(static_cast<uint32_t>(s.size()));
  PutBytes(s.data(), s.size());
}

uint32_t ByteReader::GetU32() {
  if (pos_ + 4 > size_) {
    truncated_ = true;
    pos_ = size_;
    return 0;
  }
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t ByteReader::GetU64() {
  if (pos_ + 8 > size_) {
    truncated_ = true;
    pos_ = size_;
    return 0;
  }
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

float ByteReader::GetF32() {
  uint32_t bits = GetU32();
  float v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

double ByteReader::GetF64() {
  uint64_t bits = GetU64();
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

std::string ByteReader::GetString() {
  uint32_t len = GetU32();
  if (truncated_ || pos_ + len > size_) {
    truncated_ = true;
    pos_ = size_;
    return std::string();
  }
  std::string s(reinterpret_cast<const char *>(data_ + pos_), len);
  pos_ += len;
  return s;
}

void ByteReader::GetBytes(void *out, size_t n) {
  if (pos_ + n > size_) {
    truncated_ = true;
    pos_ = size_;
    std::memset(out, 0, n);
    return;
  }
  std::memcpy(out, data_ + pos_, n);
  pos_ += n;
}

std::vector<uint8_t> ReadFileBytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Strs("cannot open file for reading: ", path));
  in.seekg(0, std::ios::end);
  std::streamoff size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::vector<uint8_t> buf(static_cast<size_t>(size));
  if (size > 0) in.read(reinterpret_cast<char *>(buf.data()), size);
  if (!in) throw Error(Strs("read failed: ", path));
  return buf;
}

void WriteFileAtomic(const std::string &path, const void *data, size_t size) {
  std::string tmp = Strs(path, ".tmp.", ::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Strs("cannot open file for writing: ", tmp));
    if (size > 0) out.write(static_cast<const char *>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) throw Error(Strs("write failed: ", tmp));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Strs("rename failed: ", tmp, " -> ", path, ": ", ec.message()));
  }
}

void WriteFileAtomic(const std::string &path, const std::vector<uint8_t> &buf) {
  WriteFileAtomic(path, buf.data(), buf.size());
}

void WriteTextFileAtomic(const std::string &path, const std::string &text) {
  WriteFileAtomic(path, text.data(), text.size());
}

uint64_t Fnv1a64(const void *data, size_t size, uint64_t state) {
  const uint8_t *p = static_cast<const uint8_t *>(data);
  uint64_t h = state;
  for (size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace adaptkit
