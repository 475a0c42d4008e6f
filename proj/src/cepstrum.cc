/* Copyright 2026 The mcmfcc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mcmfcc/cepstrum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mcmfcc/error.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

namespace {

// basis(n, k) = alpha(n) * cos(pi * n * (2k + 1) / (2K)).
Matrix dct_basis(std::size_t k_count) {
  Matrix basis(k_count, k_count);
  const double kk = static_cast<double>(k_count);
  for (std::size_t n = 0; n < k_count; ++n) {
    const double alpha = n == 0 ? std::sqrt(1.0 / kk) : std::sqrt(2.0 / kk);
    for (std::size_t k = 0; k < k_count; ++k) {
      basis(n, k) = alpha * std::cos(std::numbers::pi * static_cast<double>(n) *
                                     (2.0 * static_cast<double>(k) + 1.0) / (2.0 * kk));
    }
  }
  return basis;
}

}  // namespace

Matrix log_energies(const Matrix& energies, double floor) {
  if (!(floor > 0.0)) throw Error(ErrorCode::kInvalidFloor, format_double(floor));
  Matrix out(energies.rows(), energies.cols());
  for (std::size_t r = 0; r < energies.rows(); ++r) {
    for (std::size_t c = 0; c < energies.cols(); ++c) {
      out(r, c) = std::log(std::max(energies(r, c), floor));
    }
  }
  return out;
}

CepstralMatrix dct2(const Matrix& x, int channel_index) {
  if (x.cols() == 0) throw Error(ErrorCode::kEmptyMatrix, "DCT of zero-width rows");
  const Matrix basis = dct_basis(x.cols());
  CepstralMatrix c{Matrix(x.rows(), x.cols()), channel_index};
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto in = x.row(r);
    for (std::size_t n = 0; n < x.cols(); ++n) {
      const auto b = basis.row(n);
      double acc = 0.0;
      for (std::size_t k = 0; k < in.size(); ++k) acc += b[k] * in[k];
      c.coeffs(r, n) = acc;
    }
  }
  return c;
}

Matrix idct2(const CepstralMatrix& c) {
  const std::size_t k_count = c.coeffs.cols();
  if (k_count == 0) throw Error(ErrorCode::kEmptyMatrix, "inverse DCT of zero-width rows");
  const Matrix basis = dct_basis(k_count);
  Matrix x(c.coeffs.rows(), k_count);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t k = 0; k < k_count; ++k) {
      double acc = 0.0;
      for (std::size_t n = 0; n < k_count; ++n) acc += basis(n, k) * c.coeffs(r, n);
      x(r, k) = acc;
    }
  }
  return x;
}

}  // namespace mcmfcc
