// adaptkit/feat/feature_matrix.h

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

#ifndef ADAPTKIT_FEAT_FEATURE_MATRIX_H_
#define ADAPTKIT_FEAT_FEATURE_MATRIX_H_

#include <Eigen/Core>
#include <string>

namespace adaptkit {

enum class FeatureKind {
  kMfcc,
  kGt,
  kGtDeriv,
  kGtContextLda,
  kMfccDeriv,
  kMfccContextLda,
  kSynthetic,
};

std::string FeatureKindName(FeatureKind kind);

// T x D frame sequence for one utterance; rows are 10 ms frames.
struct FeatureMatrix {
  std::string utterance_id;
  Eigen::MatrixXd frames;
  FeatureKind kind = FeatureKind::kSynthetic;

  int NumFrames() const { return static_cast<int>(frames.rows()); }
  int Dim() const { return static_cast<int>(frames.cols()); }

  // T >= 1, D >= 1, all entries finite.
  void Validate() const;
};

}  // namespace adaptkit

#endif  // ADAPTKIT_FEAT_FEATURE_MATRIX_H_
