// adaptkit/corpus/manifest.h

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

#ifndef ADAPTKIT_CORPUS_MANIFEST_H_
#define ADAPTKIT_CORPUS_MANIFEST_H_

#include <string>
#include <vector>

namespace adaptkit {

// One dataset record.  feature_ref is either a feature archive ("FARC") that
// contains utterance_id, or a per-utterance WAV file (path ending in ".wav").
// Paths are stored as written in the manifest; Resolve* return paths relative
// to the manifest location.
struct ManifestRecord {
  std::string utterance_id;
  std::string speaker_id;
  std::string environment_id;
  std::string feature_ref;
  std::string label_ref;
};

// Manifest file: UTF-8 text, one record per line, five TAB-separated fields
// (utterance_id, speaker_id, environment_id, feature ref, label ref).
// Lines starting with '#' are ignored.
struct DatasetManifest {
  std::string base_dir;  // directory of the manifest file
  std::vector<ManifestRecord> records;

  std::string ResolveFeaturePath(const ManifestRecord &rec) const;
  std::string ResolveLabelPath(const ManifestRecord &rec) const;
};

// Parses and validates: unique utterance ids, resolvable references, and id
// coverage inside referenced archives.  Throws ManifestError with the
// matching code; malformed-line errors name the line number.
DatasetManifest LoadManifest(const std::string &path);

void WriteManifest(const std::string &path, const std::vector<ManifestRecord> &records);

}  // namespace adaptkit

#endif  // ADAPTKIT_CORPUS_MANIFEST_H_
