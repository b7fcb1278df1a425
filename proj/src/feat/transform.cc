// adaptkit/feat/transform.cc

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

#include "adaptkit/feat/transform.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>

#include "adaptkit/base/error.h"
#include "adaptkit/base/log.h"

namespace adaptkit {

std::string FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMfcc: return "mfcc";
    case FeatureKind::kGt: return "gt";
    case FeatureKind::kGtDeriv: return "gt+deriv";
    case FeatureKind::kGtContextLda: return "gt+context+lda";
    case FeatureKind::kMfccDeriv: return "mfcc+deriv";
    case FeatureKind::kMfccContextLda: return "mfcc+context+lda";
    case FeatureKind::kSynthetic: return "synthetic";
  }
  return "unknown";
}

void FeatureMatrix::Validate() const {
  ADAPTKIT_CHECK(frames.rows() >= 1 && frames.cols() >= 1,
                 "feature matrix for '", utterance_id, "' must be at least 1x1");
  ADAPTKIT_CHECK(frames.allFinite(), "non-finite feature values in '", utterance_id, "'");
}

namespace {

// Delta regression window, 2 frames each side: sum_n n (x[t+n] - x[t-n]) / 10.
constexpr int kDeltaWindow = 2;
constexpr double kDeltaDenominator = 10.0;  // 2 * (1^2 + 2^2)

Eigen::MatrixXd ComputeDeltas(const Eigen::MatrixXd &x) {
  const int num_frames = static_cast<int>(x.rows());
  Eigen::MatrixXd d(x.rows(), x.cols());
  auto clamp_row = [&](int t) { return std::clamp(t, 0, num_frames - 1); };
  for (int t = 0; t < num_frames; ++t) {
    Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(x.cols());
    for (int n = 1; n <= kDeltaWindow; ++n)
      acc += n * (x.row(clamp_row(t + n)) - x.row(clamp_row(t - n)));
    d.row(t) = acc / kDeltaDenominator;
  }
  return d;
}

FeatureKind DerivKind(FeatureKind base) {
  switch (base) {
    case FeatureKind::kGt: return FeatureKind::kGtDeriv;
    case FeatureKind::kMfcc: return FeatureKind::kMfccDeriv;
    default: return base;
  }
}

FeatureKind LdaKind(FeatureKind base) {
  switch (base) {
    case FeatureKind::kGt:
    case FeatureKind::kGtDeriv: return FeatureKind::kGtContextLda;
    case FeatureKind::kMfcc:
    case FeatureKind::kMfccDeriv: return FeatureKind::kMfccContextLda;
    default: return base;
  }
}

}  // namespace

FeatureMatrix AppendDerivatives(const FeatureMatrix &feats, int order) {
  ADAPTKIT_CHECK(order == 1 || order == 2, "derivative order must be 1 or 2, got ", order);
  feats.Validate();
  ADAPTKIT_CHECK(feats.NumFrames() >= 2 * kDeltaWindow + 1,
                 "need at least ", 2 * kDeltaWindow + 1, " frames for deltas, got ",
                 feats.NumFrames());
  const Eigen::MatrixXd &x = feats.frames;
  Eigen::MatrixXd delta = ComputeDeltas(x);
  FeatureMatrix out;
  out.utterance_id = feats.utterance_id;
  out.kind = DerivKind(feats.kind);
  out.frames.resize(x.rows(), x.cols() * (order + 1));
  out.frames.leftCols(x.cols()) = x;
  out.frames.middleCols(x.cols(), x.cols()) = delta;
  if (order == 2) out.frames.rightCols(x.cols()) = ComputeDeltas(delta);
  return out;
}

FeatureMatrix SpliceContext(const FeatureMatrix &feats, int left, int right) {
  ADAPTKIT_CHECK(left >= 0 && right >= 0, "context must be non-negative: left=", left,
                 " right=", right);
  feats.Validate();
  const Eigen::MatrixXd &x = feats.frames;
  const int num_frames = feats.NumFrames();
  const int dim = feats.Dim();
  FeatureMatrix out;
  out.utterance_id = feats.utterance_id;
  out.kind = feats.kind;
  out.frames.resize(num_frames, dim * (left + right + 1));
  for (int t = 0; t < num_frames; ++t) {
    int block = 0;
    for (int off = -left; off <= right; ++off, ++block) {
      int src = std::clamp(t + off, 0, num_frames - 1);
      out.frames.block(t, block * dim, 1, dim) = x.row(src);
    }
  }
  return out;
}

FeatureMatrix ApplyCmvn(const FeatureMatrix &feats) {
  feats.Validate();
  ADAPTKIT_CHECK(feats.NumFrames() >= 2, "CMVN needs at least 2 frames, got ", feats.NumFrames());
  const Eigen::MatrixXd &x = feats.frames;
  const double num_frames = static_cast<double>(x.rows());
  Eigen::RowVectorXd mean = x.colwise().mean();
  Eigen::RowVectorXd var =
      (x.rowwise() - mean).array().square().colwise().sum() / num_frames;
  Eigen::RowVectorXd scale = (var.array().max(1e-8)).rsqrt();
  FeatureMatrix out;
  out.utterance_id = feats.utterance_id;
  out.kind = feats.kind;
  out.frames = (x.rowwise() - mean).array().rowwise() * scale.array();
  return out;
}

LdaTransform FitLda(const Eigen::MatrixXd &frames, const std::vector<int> &labels,
                    int output_dim) {
  const int num_rows = static_cast<int>(frames.rows());
  const int dim = static_cast<int>(frames.cols());
  ADAPTKIT_CHECK(static_cast<int>(labels.size()) == num_rows,
                 "labels size ", labels.size(), " != rows ", num_rows);
  ADAPTKIT_CHECK(num_rows > dim, "need more rows (", num_rows, ") than dims (", dim, ")");
  ADAPTKIT_CHECK(output_dim >= 1 && output_dim <= dim,
                 "output_dim ", output_dim, " out of range [1, ", dim, "]");

  std::map<int, std::pair<Eigen::VectorXd, int>> per_class;  // sum, count
  for (int i = 0; i < num_rows; ++i) {
    auto it = per_class.find(labels[i]);
    if (it == per_class.end())
      per_class.emplace(labels[i], std::make_pair(frames.row(i).transpose().eval(), 1));
    else {
      it->second.first += frames.row(i).transpose();
      it->second.second += 1;
    }
  }
  ADAPTKIT_CHECK(per_class.size() >= 2, "LDA needs at least 2 classes, got ", per_class.size());

  Eigen::VectorXd global_mean = frames.colwise().mean().transpose();
  Eigen::MatrixXd within = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd between = Eigen::MatrixXd::Zero(dim, dim);
  std::map<int, Eigen::VectorXd> class_means;
  for (const auto &[label, sum_count] : per_class)
    class_means[label] = sum_count.first / sum_count.second;
  for (int i = 0; i < num_rows; ++i) {
    Eigen::VectorXd d = frames.row(i).transpose() - class_means[labels[i]];
    within += d * d.transpose();
  }
  for (const auto &[label, mean] : class_means) {
    Eigen::VectorXd d = mean - global_mean;
    between += per_class[label].second * (d * d.transpose());
  }
  within /= num_rows;
  between /= num_rows;

  // Regularize a (near-)singular within-class scatter.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> wcheck(within);
  if (wcheck.eigenvalues().minCoeff() < 1e-12 * std::max(1.0, wcheck.eigenvalues().maxCoeff())) {
    double eps = 1e-6 * within.trace() / dim;
    if (eps <= 0.0) eps = 1e-6;
    within += eps * Eigen::MatrixXd::Identity(dim, dim);
    Warn(Strs("LDA within-class scatter is singular; regularized with eps=", eps));
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(between, within);
  ADAPTKIT_CHECK(solver.info() == Eigen::Success, "generalized eigensolver failed");

  // Eigen returns ascending eigenvalues; take the top output_dim, descending.
  LdaTransform lda;
  lda.class_count = static_cast<int>(per_class.size());
  lda.projection.resize(output_dim, dim);
  for (int k = 0; k < output_dim; ++k) {
    Eigen::VectorXd v = solver.eigenvectors().col(dim - 1 - k);
    int max_idx = 0;
    v.cwiseAbs().maxCoeff(&max_idx);
    if (v(max_idx) < 0) v = -v;
    lda.projection.row(k) = v.transpose();
  }
  return lda;
}

FeatureMatrix ApplyTransform(const FeatureMatrix &feats, const LdaTransform &lda) {
  feats.Validate();
  ADAPTKIT_CHECK(feats.Dim() == lda.InputDim(), "feature dim ", feats.Dim(),
                 " != LDA input dim ", lda.InputDim());
  FeatureMatrix out;
  out.utterance_id = feats.utterance_id;
  out.kind = LdaKind(feats.kind);
  out.frames = feats.frames * lda.projection.transpose();
  return out;
}

}  // namespace adaptkit
