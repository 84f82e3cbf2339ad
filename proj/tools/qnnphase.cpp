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
// qnnphase: train a driven two-qubit system to report its own relative
// phase, test the trained controls, and run the numerical self-checks.

#include "qnn/config.hpp"
#include "qnn/errors.hpp"
#include "qnn/experiments.hpp"
#include "qnn/waveform_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

qnn::ExperimentConfig resolve_config(const CommonOptions &opts) {
    qnn::ExperimentConfig cfg;
    if (!opts.config_path.empty()) {
        cfg = qnn::load_config(opts.config_path);
    }
    if (!opts.out_dir.empty()) {
        cfg.out_dir = opts.out_dir;
    }
    if (opts.seed) {
        cfg.seed = *opts.seed;
    }
    cfg.validate();
    return cfg;
}

void add_common(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("--config", opts.config_path,
                    "Experiment config (key = value lines)");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--seed", opts.seed, "Override the config seed");
}

int cmd_train(const CommonOptions &opts) {
    const qnn::ExperimentConfig cfg = resolve_config(opts);
    std::printf("training %zu epochs, lr=%s, dt=%s ns, steps=%zu\n",
                cfg.epochs, qnn::format_shortest(cfg.learning_rate).c_str(),
                qnn::format_shortest(cfg.dt).c_str(), cfg.n_steps());
    const qnn::RunReport report =
        qnn::run_training(cfg, [](std::size_t epoch, double rms) {
            std::printf("epoch %2zu  mean_rms %.6f\n", epoch + 1, rms);
            std::fflush(stdout);
        });
    std::printf("initial mean_rms %.6f, final mean_rms %.6f\n",
                report.initial_rms, report.final_evaluation.mean_rms);
    std::printf("wrote %s\n", (cfg.out_dir / "waveforms.csv").c_str());
    std::printf("wrote %s\n", (cfg.out_dir / "epochs.csv").c_str());
    return 0;
}

int cmd_test(const CommonOptions &opts, const std::string &waveforms_path,
             const std::string &family_set) {
    const qnn::ExperimentConfig cfg = resolve_config(opts);
    const qnn::PhaseOffset offset = qnn::parse_phase_offset(family_set);
    const qnn::ControlWaveforms w = qnn::read_waveforms(waveforms_path);
    const qnn::TestReport report = qnn::run_test(w, offset, cfg);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    const auto path = cfg.out_dir / qnn::test_csv_name(offset);
    qnn::write_file_atomic(path, qnn::format_test_csv(report));

    const auto kinds = qnn::families_for(offset);
    std::printf("family_set %s: %zu pairs, mean_rms %.6f\n",
                std::string(qnn::phase_offset_name(offset)).c_str(),
                report.set.pairs.size(), report.evaluation.mean_rms);
    for (std::size_t j = 0; j < kinds.size(); ++j) {
        std::printf("  %-5s rejected %zu draws\n",
                    std::string(qnn::family_name(kinds[j])).c_str(),
                    report.set.rejected[j]);
    }
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int cmd_gradcheck(const CommonOptions &opts, std::optional<double> h,
                  std::optional<std::size_t> samples) {
    qnn::ExperimentConfig cfg = resolve_config(opts);
    if (h) {
        cfg.gradcheck_h = *h;
    }
    if (samples) {
        cfg.gradcheck_samples = *samples;
    }
    const qnn::GradcheckReport report = qnn::run_gradcheck(cfg);
    double max_abs_grad = 0.0;
    for (const auto &e : report.entries) {
        max_abs_grad = std::max(max_abs_grad, std::abs(e.analytic));
    }
    std::printf("coordinates %zu, h=%s\n", report.entries.size(),
                qnn::format_shortest(report.h).c_str());
    std::printf("max |gradient| %.6e\n", max_abs_grad);
    std::printf("max relative error %.6e (without the 1e-10 floor %.6e)\n",
                report.max_mismatch, report.max_raw_relative);
    const bool ok = report.max_mismatch < qnn::kGradcheckTolerance;
    std::printf("%s (tolerance %.0e)\n", ok ? "PASS" : "FAIL",
                qnn::kGradcheckTolerance);
    return ok ? 0 : 1;
}

int cmd_probe(double p, double phi) {
    const qnn::ProbeResult r = qnn::run_probe(p, phi);
    std::printf("circuit     %.15f\n", r.circuit);
    std::printf("closed_form %.15f\n", r.closed_form);
    std::printf("difference  %.3e\n", r.difference);
    return r.difference < 1e-12 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Relative-phase learning on a driven two-qubit system"};
    app.require_subcommand(1);

    CommonOptions train_opts;
    auto *train = app.add_subcommand("train", "Train on the 11-pair Bell set");
    add_common(train, train_opts);

    CommonOptions test_opts;
    std::string waveforms_path;
    std::string family_set;
    auto *test = app.add_subcommand("test", "Evaluate trained waveforms");
    add_common(test, test_opts);
    test->add_option("--waveforms", waveforms_path, "Waveform CSV")
        ->required();
    test->add_option("--family-set", family_set, "phi, theta or xi")
        ->required()
        ->check(CLI::IsMember({"phi", "theta", "xi"}));

    CommonOptions grad_opts;
    std::optional<double> grad_h;
    std::optional<std::size_t> grad_samples;
    auto *gradcheck = app.add_subcommand(
        "gradcheck", "Compare analytic gradients with finite differences");
    add_common(gradcheck, grad_opts);
    gradcheck->add_option("--fd-step", grad_h, "Finite-difference step (rad/ns)");
    gradcheck->add_option("--samples", grad_samples,
                          "Number of random coordinates");

    double probe_p = 0.5;
    double probe_phi = 0.0;
    auto *probe =
        app.add_subcommand("probe", "Two-qubit Hadamard parity probe");
    probe->add_option("--p", probe_p, "Population of |00>")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    probe->add_option("--phi", probe_phi, "Relative phase (rad)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*train) {
            return cmd_train(train_opts);
        }
        if (*test) {
            return cmd_test(test_opts, waveforms_path, family_set);
        }
        if (*gradcheck) {
            return cmd_gradcheck(grad_opts, grad_h, grad_samples);
        }
        if (*probe) {
            return cmd_probe(probe_p, probe_phi);
        }
    } catch (const qnn::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
