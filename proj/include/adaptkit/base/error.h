// adaptkit/base/error.h

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

#ifndef ADAPTKIT_BASE_ERROR_H_
#define ADAPTKIT_BASE_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace adaptkit {

// Base class for all toolkit errors.  Precondition violations and invalid
// inputs throw this directly; file-format errors use the coded subclasses
// below so callers can distinguish failure modes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class ArchiveErrorCode {
  kBadMagic,
  kVersionMismatch,
  kTruncated,
  kDuplicateId,
  kIoFailure,
};

class ArchiveError : public Error {
 public:
  ArchiveError(ArchiveErrorCode code, const std::string &msg)
      : Error(msg), code_(code) {}
  ArchiveErrorCode code() const { return code_; }

 private:
  ArchiveErrorCode code_;
};

enum class ManifestErrorCode {
  kMissingFile,
  kMalformedLine,
  kDanglingReference,
  kDuplicateId,
};

class ManifestError : public Error {
 public:
  ManifestError(ManifestErrorCode code, const std::string &msg)
      : Error(msg), code_(code) {}
  ManifestErrorCode code() const { return code_; }

 private:
  ManifestErrorCode code_;
};

enum class ContainerErrorCode {
  kBadMagic,
  kVersionMismatch,
  kChecksumMismatch,
  kKindMismatch,
  kTruncated,
  kIoFailure,
};

class ContainerError : public Error {
 public:
  ContainerError(ContainerErrorCode code, const std::string &msg)
      : Error(msg), code_(code) {}
  ContainerErrorCode code() const { return code_; }

 private:
  ContainerErrorCode code_;
};

namespace internal {
inline void StrAppend(std::ostringstream &) {}
template <typename T, typename... Rest>
void StrAppend(std::ostringstream &os, const T &v, const Rest &...rest) {
  os << v;
  StrAppend(os, rest...);
}
}  // namespace internal

// Builds a message from streamable pieces: Strs("dim ", d, " != ", e).
template <typename... Args>
std::string Strs(const Args &...args) {
  std::ostringstream os;
  internal::StrAppend(os, args...);
  return os.str();
}

#define ADAPTKIT_CHECK(cond, ...)                      \
  do {                                                 \
    if (!(cond))                                       \
      throw ::adaptkit::Error(::adaptkit::Strs(        \
          "check failed: " #cond ": ", __VA_ARGS__));  \
  } while (0)

}  // namespace adaptkit

#endif  // ADAPTKIT_BASE_ERROR_H_
