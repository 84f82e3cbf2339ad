// Copyright 2026 The qnnphase Authors

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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state could not be normalized (all-zero magnitudes, non-finite input).
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// An argument is outside the domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Norm or trace drifted past the integration guard.
class IntegrationDivergedError : public Error {
  public:
    IntegrationDivergedError(const std::string &what, std::size_t step)
        : Error(what), step_(step) {}
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

  private:
    std::size_t step_;
};

/// A loss or gradient became non-finite during training.
class TrainingDivergedError : public Error {
  public:
    TrainingDivergedError(const std::string &what, std::size_t epoch,
                          std::size_t pair)
        : Error(what), epoch_(epoch), pair_(pair) {}
    [[nodiscard]] std::size_t epoch() const noexcept { return epoch_; }
    [[nodiscard]] std::size_t pair() const noexcept { return pair_; }

  private:
    std::size_t epoch_;
    std::size_t pair_;
};

/// A sampled state's target is not a probability.
class RejectedSampleError : public Error {
  public:
    using Error::Error;
};

/// Bad configuration: unparseable file, broken sampler setup.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Malformed persisted file (waveforms, CSV).
class FormatError : public Error {
  public:
    using Error::Error;
};

} // namespace qnn
