// adaptkit/gmm/diag_gmm.h

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

#ifndef ADAPTKIT_GMM_DIAG_GMM_H_
#define ADAPTKIT_GMM_DIAG_GMM_H_

#include <Eigen/Core>
#include <cstdint>

namespace adaptkit {

// Diagonal-covariance Gaussian mixture.  Serves as the UBM and as both
// classes of the VAD.  All likelihood math is in the log domain.
struct DiagonalGmm {
  Eigen::VectorXd weights;  // C, sums to 1
  Eigen::MatrixXd means;    // C x D
  Eigen::MatrixXd vars;     // C x D, strictly positive

  int NumComponents() const { return static_cast<int>(weights.size()); }
  int Dim() const { return static_cast<int>(means.cols()); }

  // weights sum to 1 within 1e-10, all weights >= 0, all variances > 0.
  void Validate() const;

  // Hash over all parameter bytes; identifies the UBM that produced a set
  // of Baum-Welch statistics.
  uint64_t Fingerprint() const;

  // Per-component log w_c + log N(x; mu_c, var_c).
  Eigen::VectorXd ComponentLogLikelihoods(const Eigen::VectorXd &frame) const;

  // log sum_c w_c N(x; mu_c, var_c) via log-sum-exp.
  double LogLikelihood(const Eigen::VectorXd &frame) const;

  // Posterior responsibilities; sums to 1 within 1e-12.
  Eigen::VectorXd Posteriors(const Eigen::VectorXd &frame) const;
};

double LogSumExp(const Eigen::VectorXd &log_values);

}  // namespace adaptkit

#endif  // ADAPTKIT_GMM_DIAG_GMM_H_
