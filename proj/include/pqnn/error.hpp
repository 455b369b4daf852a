// Copyright 2026 The pqnn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pqnn {

/// Invalid combination of circuit slots, model kind, backend or config values.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument is outside the operation's domain.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds what the simulator supports.
class CapabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. The message carries the offending row number.
class IngestionError : public std::runtime_error {
  public:
    IngestionError(const std::string &what, std::size_t row)
        : std::runtime_error(what + " (row " + std::to_string(row) + ")"),
          row_(row) {}

    [[nodiscard]] std::size_t row() const noexcept { return row_; }

  private:
    std::size_t row_;
};

} // namespace pqnn
