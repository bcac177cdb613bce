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

#ifndef DENOISE_SPECIAL_MATH_H_
#define DENOISE_SPECIAL_MATH_H_

namespace denoise {

// Exponential integral E1(x) for x > 0: power series up to x = 1, modified
// Lentz continued fraction beyond. Absolute error below 1e-10 over the
// gain-rule range.
double ExpIntE1(double x);

}  // namespace denoise

#endif  // DENOISE_SPECIAL_MATH_H_
