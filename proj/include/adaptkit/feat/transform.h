// adaptkit/feat/transform.h

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

#ifndef ADAPTKIT_FEAT_TRANSFORM_H_
#define ADAPTKIT_FEAT_TRANSFORM_H_

#include <Eigen/Core>
#include <vector>

#include "adaptkit/feat/feature_matrix.h"

namespace adaptkit {

// Appends delta (order 1) or delta + delta-delta (order 2) streams computed
// with the standard 2-frames-each-side regression window and replicated edge
// padding.  Output dimension is (order + 1) * D.
FeatureMatrix AppendDerivatives(const FeatureMatrix &feats, int order);

// Concatenates rows t-left ... t+right per frame with replicate padding at
// the boundaries; keeps T, multiplies D by (left + right + 1).
FeatureMatrix SpliceContext(const FeatureMatrix &feats, int left, int right);

// Per-utterance mean and variance normalization; per-dimension variance is
// floored at 1e-8 before division, so constant columns come out all zero.
FeatureMatrix ApplyCmvn(const FeatureMatrix &feats);

struct LdaTransform {
  Eigen::MatrixXd projection;  // d_out x d_in
  int class_count = 0;
  int input_context = 1;  // frames of context the input rows were built from

  int InputDim() const { return static_cast<int>(projection.cols()); }
  int OutputDim() const { return static_cast<int>(projection.rows()); }
};

// Fisher LDA via the generalized symmetric eigenproblem of between-class and
// within-class scatter.  Rows are ordered by decreasing eigenvalue and sign
// fixed by making each row's largest-magnitude entry positive.  A singular
// within-class scatter is regularized by eps * I (eps = 1e-6 * trace / d_in)
// and reported on the warning channel.
LdaTransform FitLda(const Eigen::MatrixXd &frames, const std::vector<int> &labels, int output_dim);

FeatureMatrix ApplyTransform(const FeatureMatrix &feats, const LdaTransform &lda);

}  // namespace adaptkit

#endif  // ADAPTKIT_FEAT_TRANSFORM_H_
