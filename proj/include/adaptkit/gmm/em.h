// adaptkit/gmm/em.h

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

#ifndef ADAPTKIT_GMM_EM_H_
#define ADAPTKIT_GMM_EM_H_

#include <cstdint>
#include <vector>

#include "adaptkit/gmm/diag_gmm.h"

namespace adaptkit {

struct GmmTrainOptions {
  int components = 1;
  int iterations = 10;
  uint64_t seed = 0;  // reserved; initialization is fully deterministic
  // Variance floor as a fraction of the global per-dimension data variance.
  double variance_floor_scale = 1e-3;
};

struct GmmTrainLog {
  // Average per-frame dataset log-likelihood of the parameters entering each
  // EM iteration; non-decreasing within 1e-8 relative tolerance.
  std::vector<double> log_likelihood;
  int resplit_count = 0;
};

// LBG binary-splitting initialization from the global Gaussian with
// deterministic +-0.2 sigma perturbation, then `iterations` full EM passes
// with the variance floor applied at each M-step.  Empty components are
// re-split from the heaviest one and reported on the warning channel.
DiagonalGmm FitGmm(const Eigen::MatrixXd &frames, const GmmTrainOptions &opts,
                   GmmTrainLog *log = nullptr);

}  // namespace adaptkit

#endif  // ADAPTKIT_GMM_EM_H_
