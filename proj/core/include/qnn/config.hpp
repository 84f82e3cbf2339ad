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
/**
 * @file
 * Experiment configuration in flat `key = value` text.
 *
 *     # comment
 *     dt = 0.05
 *     t_f = 190
 *     learning_rate = 0.125
 *
 * Blank lines and `#` comments (whole-line or trailing) are ignored. Unknown
 * keys and duplicate keys are errors.
 */
#pragma once

#include "qnn/learning.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace qnn {

struct ExperimentConfig {
    double dt = kDefaultDt;              // ns
    double t_f = kDefaultFinalTime;      // ns
    double learning_rate = kDefaultLearningRate;
    std::size_t epochs = 10;
    std::uint64_t seed = 20260101;
    ControlVector initial = kDefaultInitialControls; // rad/ns
    std::size_t test_count = 550;        // per family set
    std::size_t gradcheck_samples = 100;
    double gradcheck_h = 1e-6;           // rad/ns
    std::filesystem::path out_dir = ".";

    /// t_f / dt; throws ConfigError unless it is a positive integer.
    [[nodiscard]] std::size_t n_steps() const;
    [[nodiscard]] TrainConfig train_config() const;
    void validate() const;
};

/// Throws ConfigError with a "<source>:<line>: ..." message.
ExperimentConfig parse_config(std::string_view text,
                              std::string_view source = "<config>");
ExperimentConfig load_config(const std::filesystem::path &path);

/// Canonical text form; parse_config(format_config(c)) == c field by field.
std::string format_config(const ExperimentConfig &cfg);

} // namespace qnn
