// adaptkit/corpus/manifest.cc

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

#include "adaptkit/corpus/manifest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "adaptkit/base/error.h"
#include "adaptkit/base/io.h"
#include "adaptkit/corpus/archive.h"

namespace adaptkit {

namespace fs = std::filesystem;

namespace {

std::string ResolveAgainst(const std::string &base_dir, const std::string &ref) {
  fs::path p(ref);
  if (p.is_absolute()) return ref;
  return (fs::path(base_dir) / p).string();
}

bool IsWavRef(const std::string &ref) {
  return ref.size() >= 4 && ref.compare(ref.size() - 4, 4, ".wav") == 0;
}

}  // namespace

std::string DatasetManifest::ResolveFeaturePath(const ManifestRecord &rec) const {
  return ResolveAgainst(base_dir, rec.feature_ref);
}

std::string DatasetManifest::ResolveLabelPath(const ManifestRecord &rec) const {
  return ResolveAgainst(base_dir, rec.label_ref);
}

DatasetManifest LoadManifest(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ManifestError(ManifestErrorCode::kMissingFile,
                        Strs("manifest not found: ", path));
  DatasetManifest manifest;
  manifest.base_dir = fs::path(path).parent_path().string();
  if (manifest.base_dir.empty()) manifest.base_dir = ".";

  std::string line;
  int line_no = 0;
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, '\t')) fields.push_back(field);
    if (fields.size() != 5)
      throw ManifestError(
          ManifestErrorCode::kMalformedLine,
          Strs("manifest ", path, " line ", line_no, ": expected 5 TAB-separated fields, got ",
               fields.size()));
    for (const std::string &f : fields)
      if (f.empty())
        throw ManifestError(ManifestErrorCode::kMalformedLine,
                            Strs("manifest ", path, " line ", line_no, ": empty field"));
    ManifestRecord rec{fields[0], fields[1], fields[2], fields[3], fields[4]};
    if (!ids.insert(rec.utterance_id).second)
      throw ManifestError(ManifestErrorCode::kDuplicateId,
                          Strs("duplicate utterance id '", rec.utterance_id, "' at line ", line_no));
    manifest.records.push_back(std::move(rec));
  }

  // Reference check: archives must exist and cover the ids that point at
  // them; WAV references just have to exist.
  std::map<std::string, std::set<std::string>> archive_ids;  // path -> ids needed
  for (const ManifestRecord &rec : manifest.records) {
    std::string fpath = manifest.ResolveFeaturePath(rec);
    if (IsWavRef(rec.feature_ref)) {
      if (!fs::exists(fpath))
        throw ManifestError(ManifestErrorCode::kDanglingReference,
                            Strs("utterance '", rec.utterance_id, "' references missing wav ", fpath));
    } else {
      archive_ids[fpath].insert(rec.utterance_id);
    }
    archive_ids[manifest.ResolveLabelPath(rec)].insert(rec.utterance_id);
  }
  for (const auto &[apath, needed] : archive_ids) {
    if (!fs::exists(apath))
      throw ManifestError(ManifestErrorCode::kDanglingReference,
                          Strs("referenced archive missing: ", apath));
    std::set<std::string> present;
    for (const ArchiveEntry &e : ReadArchive(apath)) present.insert(e.id);
    for (const std::string &id : needed)
      if (!present.count(id))
        throw ManifestError(ManifestErrorCode::kDanglingReference,
                            Strs("utterance '", id, "' not present in archive ", apath));
  }
  return manifest;
}

void WriteManifest(const std::string &path, const std::vector<ManifestRecord> &records) {
  std::ostringstream os;
  os << "# utterance_id\tspeaker_id\tenvironment_id\tfeature_ref\tlabel_ref\n";
  for (const ManifestRecord &r : records) {
    os << r.utterance_id << '\t' << r.speaker_id << '\t' << r.environment_id << '\t'
       << r.feature_ref << '\t' << r.label_ref << '\n';
  }
  WriteTextFileAtomic(path, os.str());
}

}  // namespace adaptkit
