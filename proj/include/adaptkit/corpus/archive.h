// adaptkit/corpus/archive.h

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

#ifndef ADAPTKIT_CORPUS_ARCHIVE_H_
#define ADAPTKIT_CORPUS_ARCHIVE_H_

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

namespace adaptkit {

// Feature archive ("FARC"): the single binary container for feature
// matrices, i-vectors and label sequences (labels as one-column matrices).
//
// Layout, all little-endian:
//   magic "FARC" | version u32 | record count u32
//   per record: id length u32 | id bytes (UTF-8) | rows u32 | cols u32
//               | rows*cols float32, row-major
struct ArchiveEntry {
  std::string id;
  Eigen::MatrixXf values;
};

inline constexpr uint32_t kArchiveVersion = 1;

void WriteArchive(const std::string &path, const std::vector<ArchiveEntry> &entries);

// Throws ArchiveError with the matching code on bad magic, version mismatch,
// truncated records or duplicate ids.
std::vector<ArchiveEntry> ReadArchive(const std::string &path);

std::map<std::string, Eigen::MatrixXf> ReadArchiveMap(const std::string &path);

// Label helpers: class id sequences ride in the archive as T x 1 matrices.
Eigen::MatrixXf LabelsToMatrix(const std::vector<int> &labels);
std::vector<int> MatrixToLabels(const Eigen::MatrixXf &m);

}  // namespace adaptkit

#endif  // ADAPTKIT_CORPUS_ARCHIVE_H_
