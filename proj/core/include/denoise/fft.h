// Copyright 2026 The Denoise Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DENOISE_FFT_H_
#define DENOISE_FFT_H_

#include <complex>
#include <vector>

namespace denoise {

// In-place radix-2 FFT. Size must be a power of two.
void Fft(std::vector<std::complex<double>>& x);

// In-place inverse FFT with 1/N scaling. Size must be a power of two.
void Ifft(std::vector<std::complex<double>>& x);

}  // namespace denoise

#endif  // DENOISE_FFT_H_
