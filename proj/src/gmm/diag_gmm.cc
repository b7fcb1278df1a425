// adaptkit/gmm/diag_gmm.cc

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

#include "adaptkit/gmm/diag_gmm.h"

#include <cmath>
#include <vector>

#include "adaptkit/base/error.h"
#include "adaptkit/base/io.h"

namespace adaptkit {

double LogSumExp(const Eigen::VectorXd &log_values) {
  double max_val = log_values.maxCoeff();
  if (!std::isfinite(max_val)) return max_val;
  return max_val + std::log((log_values.array() - max_val).exp().sum());
}

void DiagonalGmm::Validate() const {
  ADAPTKIT_CHECK(weights.size() >= 1, "GMM needs at least one component");
  ADAPTKIT_CHECK(means.rows() == weights.size() && vars.rows() == weights.size(),
                 "component count mismatch");
  ADAPTKIT_CHECK(means.cols() == vars.cols(), "mean/var dim mismatch");
  ADAPTKIT_CHECK(std::abs(weights.sum() - 1.0) <= 1e-10, "weights sum to ", weights.sum());
  ADAPTKIT_CHECK(weights.minCoeff() >= 0.0, "negative weight");
  ADAPTKIT_CHECK((vars.array() > 0.0).all(), "non-positive variance");
  ADAPTKIT_CHECK(means.allFinite() && vars.allFinite(), "non-finite parameters");
}

uint64_t DiagonalGmm::Fingerprint() const {
  uint64_t h = Fnv1a64(weights.data(), sizeof(double) * weights.size());
  h = Fnv1a64(means.data(), sizeof(double) * means.size(), h);
  h = Fnv1a64(vars.data(), sizeof(double) * vars.size(), h);
  return h;
}

Eigen::VectorXd DiagonalGmm::ComponentLogLikelihoods(const Eigen::VectorXd &frame) const {
  ADAPTKIT_CHECK(frame.size() == means.cols(), "frame dim ", frame.size(),
                 " != GMM dim ", means.cols());
  const int num_comp = NumComponents();
  Eigen::VectorXd ll(num_comp);
  for (int c = 0; c < num_comp; ++c) {
    Eigen::ArrayXd diff = frame.transpose().array() - means.row(c).array();
    Eigen::ArrayXd var = vars.row(c).array();
    double quad = (diff.square() / var).sum();
    double log_det = (var * 2.0 * M_PI).log().sum();
    double log_w = weights(c) > 0.0 ? std::log(weights(c))
                                    : -std::numeric_limits<double>::infinity();
    ll(c) = log_w - 0.5 * (log_det + quad);
  }
  return ll;
}

double DiagonalGmm::LogLikelihood(const Eigen::VectorXd &frame) const {
  return LogSumExp(ComponentLogLikelihoods(frame));
}

Eigen::VectorXd DiagonalGmm::Posteriors(const Eigen::VectorXd &frame) const {
  Eigen::VectorXd ll = ComponentLogLikelihoods(frame);
  double total = LogSumExp(ll);
  Eigen::VectorXd post = (ll.array() - total).exp();
  post /= post.sum();  // tighten to 1 after rounding
  return post;
}

}  // namespace adaptkit
