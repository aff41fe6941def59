// Copyright 2026 The cubevol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace cubevol {

// The exact kernels enumerate 2^n terms, so n is capped at a configurable
// limit. 2^30 rational terms is about the practical desk-scale ceiling;
// masks are held in 64-bit words, so the hard upper limit is 62.
inline constexpr int kDefaultDimensionCap = 30;
inline constexpr int kMaxDimensionCap = 62;

int dimension_cap() noexcept;
void set_dimension_cap(int cap);

/// Throws dimension_cap_error when n exceeds the configured cap.
void check_dimension_cap(int n);

}  // namespace cubevol
