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

#include <stdexcept>
#include <string>

namespace cubevol {

/// Base class for all library failures. `code()` is a stable,
/// machine-readable tag (the CLI forwards it verbatim).
class error : public std::runtime_error {
  public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

class dimension_cap_error : public error {
  public:
    explicit dimension_cap_error(int n, int cap)
        : error("dimension_cap",
                "dimension too large for exhaustive enumeration (n=" +
                    std::to_string(n) + ", cap=" + std::to_string(cap) + ")") {}
};

class degenerate_weights_error : public error {
  public:
    degenerate_weights_error() : error("degenerate_weights", "degenerate normal vector") {}
};

class invalid_parameter_error : public error {
  public:
    explicit invalid_parameter_error(const std::string& what)
        : error("invalid_parameter", what) {}
};

class parse_error : public error {
  public:
    explicit parse_error(const std::string& what) : error("invalid_rational", what) {}
};

class tolerance_error : public error {
  public:
    explicit tolerance_error(const std::string& what)
        : error("tolerance_unachievable", what) {}
};

}  // namespace cubevol
