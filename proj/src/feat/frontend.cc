// adaptkit/feat/frontend.cc

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

#include "adaptkit/feat/frontend.h"

#include <cmath>

#include "adaptkit/base/error.h"

namespace adaptkit {

int FrontendConfig::FrameLengthSamples() const {
  return static_cast<int>(std::lrint(frame_length_ms * sample_rate / 1000.0));
}

int FrontendConfig::FrameShiftSamples() const {
  return static_cast<int>(std::lrint(frame_shift_ms * sample_rate / 1000.0));
}

void FrontendConfig::Validate() const {
  ADAPTKIT_CHECK(sample_rate > 0, "sample_rate must be positive");
  ADAPTKIT_CHECK(frame_shift_ms <= frame_length_ms, "frame_shift ", frame_shift_ms,
                 " > frame_length ", frame_length_ms);
  ADAPTKIT_CHECK(frame_shift_ms > 0, "frame_shift must be positive");
  ADAPTKIT_CHECK(filter_count >= 2, "filter_count must be >= 2, got ", filter_count);
  if (frontend == FrontendType::kMelMfcc)
    ADAPTKIT_CHECK(cepstral_count >= 1 && cepstral_count <= filter_count,
                   "cepstral_count ", cepstral_count, " out of range [1, ", filter_count, "]");
}

void Fft(std::vector<double> &real, std::vector<double> &imag, bool inverse) {
  const size_t n = real.size();
  ADAPTKIT_CHECK(n == imag.size(), "FFT real/imag size mismatch");
  ADAPTKIT_CHECK(n > 0 && (n & (n - 1)) == 0, "FFT size must be a power of two, got ", n);
  // Bit reversal.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(real[i], real[j]);
      std::swap(imag[i], imag[j]);
    }
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double angle = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    double w_re = std::cos(angle), w_im = std::sin(angle);
    for (size_t i = 0; i < n; i += len) {
      double cur_re = 1.0, cur_im = 0.0;
      for (size_t k = 0; k < len / 2; ++k) {
        size_t a = i + k, b = i + k + len / 2;
        double tr = real[b] * cur_re - imag[b] * cur_im;
        double ti = real[b] * cur_im + imag[b] * cur_re;
        real[b] = real[a] - tr;
        imag[b] = imag[a] - ti;
        real[a] += tr;
        imag[a] += ti;
        double next_re = cur_re * w_re - cur_im * w_im;
        cur_im = cur_re * w_im + cur_im * w_re;
        cur_re = next_re;
      }
    }
  }
  if (inverse) {
    for (size_t i = 0; i < n; ++i) {
      real[i] /= static_cast<double>(n);
      imag[i] /= static_cast<double>(n);
    }
  }
}

namespace {

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Glasberg-Moore ERB scale.
double HzToErb(double hz) { return 21.4 * std::log10(1.0 + 0.00437 * hz); }
double ErbToHz(double erb) { return (std::pow(10.0, erb / 21.4) - 1.0) / 0.00437; }
double ErbBandwidth(double hz) { return 24.7 * (0.00437 * hz + 1.0); }

constexpr double kMinCenterHz = 100.0;

}  // namespace

std::vector<double> FilterCenterFrequencies(const FrontendConfig &config) {
  config.Validate();
  const double nyquist = config.sample_rate / 2.0;
  std::vector<double> centers(config.filter_count);
  if (config.frontend == FrontendType::kErbGt) {
    double lo = HzToErb(kMinCenterHz), hi = HzToErb(0.95 * nyquist);
    for (int j = 0; j < config.filter_count; ++j)
      centers[j] = ErbToHz(lo + (hi - lo) * j / (config.filter_count - 1));
  } else {
    // Triangular mel centers: interior points of the (count + 2)-point grid.
    double lo = HzToMel(kMinCenterHz), hi = HzToMel(0.95 * nyquist);
    for (int j = 0; j < config.filter_count; ++j)
      centers[j] = MelToHz(lo + (hi - lo) * (j + 1) / (config.filter_count + 1));
  }
  return centers;
}

Eigen::MatrixXd BuildFilterbank(const FrontendConfig &config, int fft_size) {
  config.Validate();
  const int num_bins = fft_size / 2 + 1;
  const double bin_hz = static_cast<double>(config.sample_rate) / fft_size;
  Eigen::MatrixXd bank = Eigen::MatrixXd::Zero(config.filter_count, num_bins);
  const double nyquist = config.sample_rate / 2.0;

  if (config.frontend == FrontendType::kErbGt) {
    std::vector<double> centers = FilterCenterFrequencies(config);
    for (int j = 0; j < config.filter_count; ++j) {
      double b = 1.019 * ErbBandwidth(centers[j]);
      for (int k = 0; k < num_bins; ++k) {
        double f = k * bin_hz;
        double u = (f - centers[j]) / b;
        // 4th-order gammatone magnitude response.
        bank(j, k) = std::pow(1.0 + u * u, -2.0);
      }
    }
  } else {
    double lo = HzToMel(kMinCenterHz), hi = HzToMel(0.95 * nyquist);
    std::vector<double> edges(config.filter_count + 2);
    for (int j = 0; j < config.filter_count + 2; ++j)
      edges[j] = MelToHz(lo + (hi - lo) * j / (config.filter_count + 1));
    for (int j = 0; j < config.filter_count; ++j) {
      double left = edges[j], center = edges[j + 1], right = edges[j + 2];
      for (int k = 0; k < num_bins; ++k) {
        double f = k * bin_hz;
        if (f <= left || f >= right) continue;
        bank(j, k) = f <= center ? (f - left) / (center - left) : (right - f) / (right - center);
      }
    }
  }
  return bank;
}

FeatureMatrix ComputeFeatures(const std::vector<double> &audio, int sample_rate,
                              const FrontendConfig &config, const std::string &utterance_id) {
  config.Validate();
  ADAPTKIT_CHECK(sample_rate == config.sample_rate, "audio sample rate ", sample_rate,
                 " != config sample rate ", config.sample_rate);
  const int frame_len = config.FrameLengthSamples();
  const int frame_shift = config.FrameShiftSamples();
  ADAPTKIT_CHECK(static_cast<int>(audio.size()) >= frame_len,
                 "audio shorter than one frame: ", audio.size(), " < ", frame_len);
  for (double s : audio)
    if (!std::isfinite(s)) throw Error("non-finite audio sample");

  const int num_frames = (static_cast<int>(audio.size()) - frame_len) / frame_shift + 1;
  const int fft_size = NextPowerOfTwo(frame_len);
  const int num_bins = fft_size / 2 + 1;

  Eigen::VectorXd window(frame_len);
  for (int i = 0; i < frame_len; ++i)
    window(i) = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (frame_len - 1));

  Eigen::MatrixXd bank = BuildFilterbank(config, fft_size);

  const bool is_mfcc = config.frontend == FrontendType::kMelMfcc;
  const int out_dim = is_mfcc ? config.cepstral_count : config.filter_count;

  // Orthonormal DCT-II for the cepstral path.
  Eigen::MatrixXd dct;
  if (is_mfcc) {
    const int n = config.filter_count;
    dct.resize(config.cepstral_count, n);
    for (int k = 0; k < config.cepstral_count; ++k) {
      double norm = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
      for (int j = 0; j < n; ++j) dct(k, j) = norm * std::cos(M_PI * k * (j + 0.5) / n);
    }
  }

  FeatureMatrix out;
  out.utterance_id = utterance_id;
  out.kind = is_mfcc ? FeatureKind::kMfcc : FeatureKind::kGt;
  out.frames.resize(num_frames, out_dim);

  std::vector<double> re(fft_size), im(fft_size);
  Eigen::VectorXd magnitude(num_bins);
  for (int t = 0; t < num_frames; ++t) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    const int start = t * frame_shift;
    for (int i = 0; i < frame_len; ++i) re[i] = audio[start + i] * window(i);
    Fft(re, im, false);
    for (int k = 0; k < num_bins; ++k) magnitude(k) = std::hypot(re[k], im[k]);

    Eigen::VectorXd energies = bank * magnitude;
    Eigen::VectorXd log_energies = energies.array().max(kLogEnergyFloor).log();
    if (is_mfcc)
      out.frames.row(t) = (dct * log_energies).transpose();
    else
      out.frames.row(t) = log_energies.transpose();
  }
  return out;
}

}  // namespace adaptkit
