// adaptkit/gmm/em.cc

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

#include "adaptkit/gmm/em.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adaptkit/base/error.h"
#include "adaptkit/base/log.h"

namespace adaptkit {

namespace {

// log densities for all frames x components, plus per-frame totals.
void FrameLogLikelihoods(const Eigen::MatrixXd &frames, const DiagonalGmm &gmm,
                         Eigen::MatrixXd *per_component, Eigen::VectorXd *per_frame) {
  const int num_frames = static_cast<int>(frames.rows());
  const int num_comp = gmm.NumComponents();
  per_component->resize(num_frames, num_comp);
  for (int c = 0; c < num_comp; ++c) {
    Eigen::ArrayXd var = gmm.vars.row(c).transpose().array();
    double log_const = std::log(gmm.weights(c)) - 0.5 * (var * 2.0 * M_PI).log().sum();
    Eigen::MatrixXd diff = frames.rowwise() - gmm.means.row(c);
    Eigen::VectorXd inv_var = var.inverse().matrix();
    per_component->col(c) =
        (diff.array().square().matrix() * inv_var).array() * -0.5 + log_const;
  }
  per_frame->resize(num_frames);
  for (int t = 0; t < num_frames; ++t) per_frame->coeffRef(t) = LogSumExp(per_component->row(t).transpose());
}

void SplitComponent(DiagonalGmm *gmm, int source, int target) {
  Eigen::RowVectorXd sigma = gmm->vars.row(source).array().sqrt();
  double half = gmm->weights(source) / 2.0;
  gmm->weights(source) = half;
  gmm->weights(target) = half;
  gmm->means.row(target) = gmm->means.row(source) + 0.2 * sigma;
  gmm->means.row(source) -= 0.2 * sigma;
  gmm->vars.row(target) = gmm->vars.row(source);
}

}  // namespace

DiagonalGmm FitGmm(const Eigen::MatrixXd &frames, const GmmTrainOptions &opts,
                   GmmTrainLog *log) {
  const int num_frames = static_cast<int>(frames.rows());
  const int dim = static_cast<int>(frames.cols());
  ADAPTKIT_CHECK(opts.components >= 1, "components must be >= 1");
  ADAPTKIT_CHECK(opts.iterations >= 1, "iterations must be >= 1");
  ADAPTKIT_CHECK(num_frames >= opts.components, "N=", num_frames,
                 " frames < C=", opts.components, " components");
  ADAPTKIT_CHECK(frames.allFinite(), "non-finite training frames");

  // Global Gaussian and the variance floor derived from it.
  Eigen::RowVectorXd global_mean = frames.colwise().mean();
  Eigen::RowVectorXd global_var =
      (frames.rowwise() - global_mean).array().square().colwise().sum() / num_frames;
  Eigen::RowVectorXd floor = (opts.variance_floor_scale * global_var.array()).max(1e-10);

  DiagonalGmm gmm;
  gmm.weights = Eigen::VectorXd::Ones(1);
  gmm.means = global_mean;
  gmm.vars = global_var.array().max(floor.array());

  // LBG: double (or top off) by splitting the heaviest components.
  while (gmm.NumComponents() < opts.components) {
    int current = gmm.NumComponents();
    int to_split = std::min(current, opts.components - current);
    std::vector<int> order(current);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gmm.weights(a) > gmm.weights(b); });
    DiagonalGmm next;
    int total = current + to_split;
    next.weights.resize(total);
    next.means.resize(total, dim);
    next.vars.resize(total, dim);
    next.weights.head(current) = gmm.weights;
    next.means.topRows(current) = gmm.means;
    next.vars.topRows(current) = gmm.vars;
    for (int i = 0; i < to_split; ++i) SplitComponent(&next, order[i], current + i);
    gmm = std::move(next);
  }

  Eigen::MatrixXd comp_ll;
  Eigen::VectorXd frame_ll;
  for (int iter = 0; iter < opts.iterations; ++iter) {
    FrameLogLikelihoods(frames, gmm, &comp_ll, &frame_ll);
    if (log) log->log_likelihood.push_back(frame_ll.mean());

    Eigen::MatrixXd post = (comp_ll.colwise() - frame_ll).array().exp();
    Eigen::VectorXd counts = post.colwise().sum().transpose();

    // Re-split the heaviest component into any that went empty.
    for (int c = 0; c < gmm.NumComponents(); ++c) {
      if (counts(c) >= 1e-6) continue;
      int heaviest = 0;
      counts.maxCoeff(&heaviest);
      Warn(Strs("empty GMM component ", c, " after E-step; re-splitting component ", heaviest));
      if (log) ++log->resplit_count;
      gmm.weights(c) = gmm.weights(heaviest);
      gmm.means.row(c) = gmm.means.row(heaviest);
      gmm.vars.row(c) = gmm.vars.row(heaviest);
      SplitComponent(&gmm, heaviest, c);
      FrameLogLikelihoods(frames, gmm, &comp_ll, &frame_ll);
      post = (comp_ll.colwise() - frame_ll).array().exp();
      counts = post.colwise().sum().transpose();
    }

    Eigen::MatrixXd weighted_sum = post.transpose() * frames;           // C x D
    Eigen::MatrixXd weighted_sq = post.transpose() * frames.array().square().matrix();
    for (int c = 0; c < gmm.NumComponents(); ++c) {
      double n_c = counts(c);
      gmm.means.row(c) = weighted_sum.row(c) / n_c;
      Eigen::RowVectorXd var = weighted_sq.row(c) / n_c -
                               gmm.means.row(c).array().square().matrix();
      gmm.vars.row(c) = var.array().max(floor.array());
    }
    gmm.weights = counts / counts.sum();
  }
  gmm.Validate();
  return gmm;
}

}  // namespace adaptkit
