// adaptkit/corpus/archive.cc

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

#include "adaptkit/corpus/archive.h"

#include <set>

#include "adaptkit/base/error.h"
#include "adaptkit/base/io.h"

namespace adaptkit {

namespace {
const char kMagic[4] = {'F', 'A', 'R', 'C'};
}

void WriteArchive(const std::string &path, const std::vector<ArchiveEntry> &entries) {
  std::set<std::string> seen;
  for (const ArchiveEntry &e : entries) {
    if (!seen.insert(e.id).second)
      throw ArchiveError(ArchiveErrorCode::kDuplicateId,
                         Strs("duplicate id in archive write: ", e.id));
    if (!e.values.allFinite())
      throw Error(Strs("non-finite values in archive entry: ", e.id));
  }
  ByteWriter w;
  w.PutBytes(kMagic, 4);
  w.PutU32(kArchiveVersion);
  w.PutU32(static_cast<uint32_t>(entries.size()));
  for (const ArchiveEntry &e : entries) {
    w.PutString(e.id);
    w.PutU32(static_cast<uint32_t>(e.values.rows()));
    w.PutU32(static_cast<uint32_t>(e.values.cols()));
    for (Eigen::Index r = 0; r < e.values.rows(); ++r)
      for (Eigen::Index c = 0; c < e.values.cols(); ++c) w.PutF32(e.values(r, c));
  }
  WriteFileAtomic(path, w.data());
}

std::vector<ArchiveEntry> ReadArchive(const std::string &path) {
  std::vector<uint8_t> buf;
  try {
    buf = ReadFileBytes(path);
  } catch (const Error &e) {
    throw ArchiveError(ArchiveErrorCode::kIoFailure, e.what());
  }
  ByteReader r(buf);
  char magic[4] = {0, 0, 0, 0};
  r.GetBytes(magic, 4);
  if (r.Truncated() || std::memcmp(magic, kMagic, 4) != 0)
    throw ArchiveError(ArchiveErrorCode::kBadMagic,
                       Strs("bad archive magic in ", path));
  uint32_t version = r.GetU32();
  if (!r.Truncated() && version != kArchiveVersion)
    throw ArchiveError(ArchiveErrorCode::kVersionMismatch,
                       Strs("unsupported archive version ", version, " in ", path));
  uint32_t count = r.GetU32();
  std::vector<ArchiveEntry> entries;
  entries.reserve(count);
  std::set<std::string> seen;
  for (uint32_t i = 0; i < count; ++i) {
    ArchiveEntry e;
    e.id = r.GetString();
    uint32_t rows = r.GetU32();
    uint32_t cols = r.GetU32();
    if (r.Truncated())
      throw ArchiveError(ArchiveErrorCode::kTruncated,
                         Strs("truncated record header at index ", i, " in ", path));
    e.values.resize(rows, cols);
    for (uint32_t rr = 0; rr < rows; ++rr)
      for (uint32_t cc = 0; cc < cols; ++cc) e.values(rr, cc) = r.GetF32();
    if (r.Truncated())
      throw ArchiveError(ArchiveErrorCode::kTruncated,
                         Strs("truncated record data for id '", e.id, "' in ", path));
    if (!seen.insert(e.id).second)
      throw ArchiveError(ArchiveErrorCode::kDuplicateId,
                         Strs("duplicate id '", e.id, "' in ", path));
    entries.push_back(std::move(e));
  }
  if (r.Truncated())
    throw ArchiveError(ArchiveErrorCode::kTruncated, Strs("truncated archive ", path));
  return entries;
}

std::map<std::string, Eigen::MatrixXf> ReadArchiveMap(const std::string &path) {
  std::map<std::string, Eigen::MatrixXf> out;
  for (ArchiveEntry &e : ReadArchive(path)) out[e.id] = std::move(e.values);
  return out;
}

Eigen::MatrixXf LabelsToMatrix(const std::vector<int> &labels) {
  Eigen::MatrixXf m(static_cast<Eigen::Index>(labels.size()), 1);
  for (size_t i = 0; i < labels.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = static_cast<float>(labels[i]);
  return m;
}

std::vector<int> MatrixToLabels(const Eigen::MatrixXf &m) {
  ADAPTKIT_CHECK(m.cols() == 1, "label matrix must have one column, got ", m.cols());
  std::vector<int> labels(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) labels[static_cast<size_t>(i)] = static_cast<int>(m(i, 0));
  return labels;
}

}  // namespace adaptkit
