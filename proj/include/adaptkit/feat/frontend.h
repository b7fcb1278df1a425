// adaptkit/feat/frontend.h

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

#ifndef ADAPTKIT_FEAT_FRONTEND_H_
#define ADAPTKIT_FEAT_FRONTEND_H_

#include <Eigen/Core>
#include <string>
#include <vector>

#include "adaptkit/feat/feature_matrix.h"

namespace adaptkit {

enum class FrontendType { kMelMfcc, kErbGt };

struct FrontendConfig {
  int sample_rate = 8000;
  double frame_length_ms = 25.0;
  double frame_shift_ms = 10.0;
  int filter_count = 40;
  FrontendType frontend = FrontendType::kErbGt;
  int cepstral_count = 13;  // MFCC only

  int FrameLengthSamples() const;
  int FrameShiftSamples() const;
  void Validate() const;
};

// Filterbank over FFT magnitude bins.  The gammatone path is an ERB-spaced
// bank of 4th-order gammatone magnitude responses sampled on the bins; the
// mel path is the standard triangular bank.  Rows: filters, cols: bins.
Eigen::MatrixXd BuildFilterbank(const FrontendConfig &config, int fft_size);

// Center frequencies of the bank, Hz (for tests and inspection).
std::vector<double> FilterCenterFrequencies(const FrontendConfig &config);

// Hamming-windowed frames, padded-to-power-of-two FFT, filter integration of
// the magnitude spectrum, log compression with floor 1e-10.  MFCC applies an
// orthonormal DCT-II to the log mel energies and keeps cepstral_count
// coefficients.  T = floor((len - frame_length) / frame_shift) + 1.
FeatureMatrix ComputeFeatures(const std::vector<double> &audio, int sample_rate,
                              const FrontendConfig &config,
                              const std::string &utterance_id = "");

// Log-energy floor used by the frontends; zero signal yields this per bin.
inline constexpr double kLogEnergyFloor = 1e-10;

// In-place iterative radix-2 FFT over interleaved complex pairs.  Fixed
// deterministic kernel so feature extraction is bit-reproducible.
void Fft(std::vector<double> &real, std::vector<double> &imag, bool inverse);

}  // namespace adaptkit

#endif  // ADAPTKIT_FEAT_FRONTEND_H_
