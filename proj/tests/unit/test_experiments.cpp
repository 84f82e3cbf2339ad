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
#include "qnn/errors.hpp"
#include "qnn/experiments.hpp"
#include "qnn/waveform_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace qnn;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

ExperimentConfig short_config() {
    ExperimentConfig cfg;
    cfg.t_f = 20.0;
    cfg.epochs = 2;
    cfg.test_count = 30;
    cfg.gradcheck_samples = 40;
    return cfg;
}

} // namespace

TEST(GradientMismatch, FloorAndRelative) {
    EXPECT_EQ(gradient_mismatch(0.0, 5e-11), 0.0);
    EXPECT_EQ(gradient_mismatch(1e-3, 1e-3), 0.0);
    EXPECT_NEAR(gradient_mismatch(1.0, 1.001), 0.001 / 1.001, 1e-15);
    EXPECT_NEAR(gradient_mismatch(-2.0, 2.0), 2.0, 1e-15);
}

TEST(RunGradcheck, DefaultsPass) {
    ExperimentConfig cfg;
    cfg.gradcheck_samples = 60;
    const auto report = run_gradcheck(cfg);
    ASSERT_EQ(report.entries.size(), 60u);
    EXPECT_LT(report.max_mismatch, kGradcheckTolerance);
    EXPECT_EQ(report.h, 1e-6);
    const auto again = run_gradcheck(cfg);
    EXPECT_EQ(again.max_mismatch, report.max_mismatch);
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        EXPECT_EQ(again.entries[i].analytic, report.entries[i].analytic);
        EXPECT_EQ(again.entries[i].step, report.entries[i].step);
    }
}

TEST(RunGradcheck, MismatchScalesWithStepSquared) {
    ExperimentConfig cfg;
    cfg.gradcheck_samples = 30;
    cfg.gradcheck_h = 0.02;
    const double e1 = run_gradcheck(cfg).max_mismatch;
    cfg.gradcheck_h = 0.01;
    const double e2 = run_gradcheck(cfg).max_mismatch;
    EXPECT_GT(e1, 1e-8);
    EXPECT_NEAR(e1 / e2, 4.0, 0.6);
}

TEST(RunTest, DeterministicAndConsistent) {
    const auto cfg = short_config();
    const ControlWaveforms w(cfg.dt, cfg.n_steps(), cfg.initial);
    const auto a = run_test(w, PhaseOffset::xi, cfg);
    const auto b = run_test(w, PhaseOffset::xi, cfg);
    ASSERT_EQ(a.evaluation.pairs.size(), 30u);
    EXPECT_EQ(a.evaluation.mean_rms, b.evaluation.mean_rms);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.evaluation.pairs.size(); ++i) {
        EXPECT_EQ(a.evaluation.pairs[i].output, b.evaluation.pairs[i].output);
        sum += a.evaluation.pairs[i].error;
    }
    EXPECT_NEAR(a.evaluation.mean_rms, sum / 30.0, 1e-15);

    const auto csv = lines_of(format_test_csv(a));
    ASSERT_EQ(csv.size(), 32u);
    EXPECT_EQ(csv.front(), "family,a00,a01,a10,a11,phase,target,output,abs_error");
    EXPECT_EQ(csv.back().rfind("# summary: family_set=xi, pairs=30, mean_rms=", 0),
              0u);
    EXPECT_NE(csv.back().find("rejected=EPRX:"), std::string::npos);
    EXPECT_EQ(csv[1].rfind("EPRX,", 0), 0u);
    EXPECT_EQ(test_csv_name(PhaseOffset::theta), "test_theta.csv");
}

TEST(RunTest, SeedChangesTheSet) {
    auto cfg = short_config();
    const ControlWaveforms w(cfg.dt, cfg.n_steps(), cfg.initial);
    const auto a = run_test(w, PhaseOffset::phi, cfg);
    cfg.seed += 1;
    const auto b = run_test(w, PhaseOffset::phi, cfg);
    EXPECT_NE(a.evaluation.mean_rms, b.evaluation.mean_rms);
}

TEST(RunTraining, WritesOutputs) {
    auto cfg = short_config();
    cfg.out_dir = std::filesystem::temp_directory_path() /
                  ("qnnphase_train_" + std::to_string(::getpid()));
    std::filesystem::remove_all(cfg.out_dir);
    std::size_t calls = 0;
    const auto report =
        run_training(cfg, [&](std::size_t, double) { ++calls; });
    EXPECT_EQ(calls, 2u);
    ASSERT_TRUE(std::filesystem::exists(cfg.out_dir / "waveforms.csv"));
    EXPECT_EQ(read_waveforms(cfg.out_dir / "waveforms.csv"), report.waveforms);

    const auto epochs = lines_of(read_text_file(cfg.out_dir / "epochs.csv"));
    ASSERT_EQ(epochs.size(), 3u);
    EXPECT_EQ(epochs[0], "epoch,mean_rms");
    EXPECT_EQ(epochs[1], "1," + format_g17(report.epoch_rms[0]));
    EXPECT_EQ(epochs[2], "2," + format_g17(report.epoch_rms[1]));

    const auto pairs =
        lines_of(read_text_file(cfg.out_dir / "training_pairs.csv"));
    ASSERT_EQ(pairs.size(), 13u);
    EXPECT_EQ(pairs[0], "n,phi,target,output,abs_error");
    EXPECT_EQ(pairs.back().rfind("# summary: pairs=11, mean_rms=", 0), 0u);
    std::filesystem::remove_all(cfg.out_dir);
}

TEST(RunTraining, RejectsInvalidConfig) {
    auto cfg = short_config();
    cfg.dt = 0.07;
    EXPECT_THROW(run_training(cfg), ConfigError);
}

TEST(RunProbe, Examples) {
    auto r = run_probe(0.5, 0.0);
    EXPECT_NEAR(r.circuit, 1.0, 1e-12);
    EXPECT_NEAR(r.closed_form, 1.0, 1e-15);
    EXPECT_LT(r.difference, 1e-12);
    r = run_probe(0.5, std::numbers::pi);
    EXPECT_NEAR(r.circuit, 0.0, 1e-12);
    r = run_probe(0.25, 0.0);
    EXPECT_NEAR(r.circuit, 0.5 + std::sqrt(3.0) / 4.0, 1e-12);
    EXPECT_THROW(run_probe(-0.5, 0.0), DomainError);
}
