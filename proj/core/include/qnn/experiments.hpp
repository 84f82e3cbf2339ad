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
 * Experiment recipes behind the command-line tool. Each returns its results
 * and, where an output directory is involved, writes CSV data there.
 */
#pragma once

#include "qnn/config.hpp"
#include "qnn/learning.hpp"
#include "qnn/statesgen.hpp"

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace qnn {

/// Trains on the 11-pair Bell set. Writes waveforms.csv, epochs.csv
/// (epoch,mean_rms) and training_pairs.csv into cfg.out_dir.
RunReport run_training(const ExperimentConfig &cfg,
                       const EpochCallback &on_epoch = {});

std::string format_epochs_csv(const RunReport &report);

struct TestReport {
    TestSet set;
    Evaluation evaluation;
};

/// Samples cfg.test_count states of the given offset with cfg.seed and
/// evaluates them under `w` without training.
TestReport run_test(const ControlWaveforms &w, PhaseOffset offset,
                    const ExperimentConfig &cfg);

/// family,a00,a01,a10,a11,phase,target,output,abs_error rows followed by a
/// "# summary" comment line.
std::string format_test_csv(const TestReport &report);

/// File name used by the CLI for a test report, e.g. "test_phi.csv".
std::string test_csv_name(PhaseOffset offset);

struct GradcheckEntry {
    std::size_t pair = 0;
    std::size_t step = 0;
    Control control = Control::K_A;
    double analytic = 0.0;
    double finite_difference = 0.0;
    double mismatch = 0.0;
};

struct GradcheckReport {
    std::vector<GradcheckEntry> entries;
    double max_mismatch = 0.0;
    /// Largest |a - f| / max(|a|, |f|) without the absolute floor.
    double max_raw_relative = 0.0;
    double h = 0.0;
};

/// Relative disagreement with an absolute floor: 0 when |a - f| < 1e-10,
/// otherwise |a - f| / max(|a|, |f|).
double gradient_mismatch(double analytic, double finite_difference);

inline constexpr double kGradcheckTolerance = 1e-6;

/**
 * Compares gradient() with fd_gradient() at cfg.gradcheck_samples random
 * (pair, step, control) coordinates. The waveforms are the default
 * constants plus seeded random per-sample noise; pairs are drawn from all
 * nine families with random targets.
 */
GradcheckReport run_gradcheck(const ExperimentConfig &cfg);

struct ProbeResult {
    double circuit = 0.0;
    double closed_form = 0.0;
    double difference = 0.0;
};

ProbeResult run_probe(double p, double phi);

} // namespace qnn
