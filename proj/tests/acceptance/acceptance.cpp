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
// Acceptance suite. With no arguments every criterion runs and prints one
// PASS/FAIL line; `--criterion N` runs a single one. Exit status is nonzero
// if any selected criterion fails.

#include "qnn/config.hpp"
#include "qnn/dynamics.hpp"
#include "qnn/errors.hpp"
#include "qnn/experiments.hpp"
#include "qnn/learning.hpp"
#include "qnn/statesgen.hpp"
#include "qnn/targets.hpp"
#include "qnn/waveform_io.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace qnn;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ControlWaveforms random_waveforms(std::mt19937_64 &rng, double amplitude) {
    std::uniform_real_distribution<double> u(-amplitude, amplitude);
    ControlWaveforms w(kDefaultDt, kDefaultSteps);
    for (Control c : kAllControls) {
        for (double &v : w.series(c)) {
            v = u(rng);
        }
    }
    return w;
}

/// The default training run, shared by criteria 4 to 8.
struct TrainedRun {
    RunReport report;
    std::vector<double> epochs_csv;
    double seconds = 0.0;
};

const TrainedRun &trained_run() {
    static const TrainedRun run = [] {
        ExperimentConfig cfg;
        cfg.out_dir = std::filesystem::temp_directory_path() /
                      ("qnnphase_acceptance_" + std::to_string(::getpid()));
        const auto t0 = Clock::now();
        TrainedRun r{run_training(cfg), {}, 0.0};
        r.seconds = seconds_since(t0);
        std::istringstream in(read_text_file(cfg.out_dir / "epochs.csv"));
        std::string line;
        std::getline(in, line); // column line
        while (std::getline(in, line)) {
            r.epochs_csv.push_back(std::stod(line.substr(line.find(',') + 1)));
        }
        std::filesystem::remove_all(cfg.out_dir);
        return r;
    }();
    return run;
}

Outcome propagator_correctness() {
    std::mt19937_64 rng(101);
    double worst_amp = 0.0;
    double worst_norm = 0.0;
    double worst_time = 0.0;
    std::vector<ControlWaveforms> cases;
    cases.emplace_back(kDefaultDt, kDefaultSteps, kDefaultInitialControls);
    for (int i = 0; i < 4; ++i) {
        cases.push_back(random_waveforms(rng, 0.1));
    }
    for (const auto &w : cases) {
        for (int j = 0; j < 3; ++j) {
            const auto psi0 = qnn::test::random_state(rng).amplitudes();
            const auto t0 = Clock::now();
            const auto rk = propagate(psi0, w).final_state();
            worst_time = std::max(worst_time, seconds_since(t0));
            const auto ex = propagate_expm(psi0, w);
            worst_amp = std::max(worst_amp, qnn::test::max_amp_diff(rk, ex));
            worst_norm =
                std::max(worst_norm, std::abs(std::sqrt(norm_squared(rk)) - 1.0));
        }
    }
    return {worst_amp < 1e-9 && worst_norm < 1e-8 && worst_time < 1.0,
            "max amplitude error " + num(worst_amp) + ", norm drift " +
                num(worst_norm) + ", slowest propagation " + num(worst_time) +
                " s"};
}

Outcome picture_equivalence() {
    std::mt19937_64 rng(102);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto s = qnn::test::random_state(rng);
        const auto w = random_waveforms(rng, 0.1);
        const auto rho = propagate_density(pure_density(s), w).matrix();
        const auto psi = propagate_final(s.amplitudes(), w);
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                worst = std::max(worst,
                                 std::abs(rho(r, c) - psi[r] * std::conj(psi[c])));
            }
        }
    }
    return {worst < 1e-8, "max entry difference " + num(worst) + " over 20 inputs"};
}

Outcome gradient_exactness() {
    ExperimentConfig cfg;
    cfg.gradcheck_samples = 120;
    cfg.gradcheck_h = 1e-6;
    const auto t0 = Clock::now();
    const auto report = run_gradcheck(cfg);
    const double secs = seconds_since(t0);
    return {report.max_mismatch < 1e-6 && report.entries.size() >= 100 &&
                secs < 60.0,
            "max relative error " + num(report.max_mismatch) +
                " (unfloored " + num(report.max_raw_relative) + ") over " +
                std::to_string(report.entries.size()) + " coordinates, " +
                num(secs) + " s"};
}

Outcome symmetry() {
    const auto &w = trained_run().report.waveforms;
    double worst = 0.0;
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        worst = std::max(worst, std::abs(w.series(Control::K_A)[k] -
                                         w.series(Control::K_B)[k]));
        worst = std::max(worst, std::abs(w.series(Control::eps_A)[k] -
                                         w.series(Control::eps_B)[k]));
    }
    return {worst < 1e-9, "max A/B difference " + num(worst)};
}

Outcome training_reproduction() {
    const auto &run = trained_run();
    const auto &rms = run.epochs_csv;
    bool monotone = true;
    for (std::size_t e = 2; e < rms.size(); ++e) {
        monotone = monotone && rms[e] <= rms[e - 1];
    }
    const double final_rms = rms.empty() ? NAN : rms.back();
    return {rms.size() == 10 && final_rms <= 0.02 && monotone &&
                run.seconds < 300.0,
            "final mean RMS " + num(final_rms) + " after " +
                std::to_string(rms.size()) + " epochs (threshold 0.02), " +
                (monotone ? "non-increasing" : "not non-increasing") +
                " after epoch 2, " + num(run.seconds) + " s"};
}

Outcome generalization(PhaseOffset offset, double threshold) {
    const ExperimentConfig cfg;
    const auto report = run_test(trained_run().report.waveforms, offset, cfg);
    const auto kinds = families_for(offset);
    std::string per_family;
    for (FamilyKind k : kinds) {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < report.set.states.size(); ++i) {
            if (report.set.states[i].kind == k) {
                sum += report.evaluation.pairs[i].error;
                ++n;
            }
        }
        per_family += std::string(per_family.empty() ? "" : ", ") +
                      std::string(family_name(k)) + " " +
                      num(sum / static_cast<double>(n));
    }
    const double mean = report.evaluation.mean_rms;
    return {report.evaluation.pairs.size() == 550 && mean <= threshold,
            "mean RMS " + num(mean) + " over " +
                std::to_string(report.evaluation.pairs.size()) +
                " states (threshold " + num(threshold) + "; " + per_family + ")"};
}

Outcome target_identities() {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = -kPi + i * (2.0 * kPi / 100.0);
        const double c = std::cos(x / 2.0);
        const double cos2 = c * c;
        const double three = 2.0 * r3 * r3 * cos2;
        const double diffs[] = {
            target_equal_bell(x) - cos2,
            target_bell(r2, r2, x) - target_equal_bell(x),
            target_epr(r2, r2, x) - cos2,
            target_eprx(r2, r2, x) - cos2,
            target_bp1(r3, r3, r3, x) - three,
            target_bp2(r3, r3, r3, x) - three,
            target_ep1(r3, r3, r3, x) - three,
            target_ep2(r3, r3, r3, x) - three,
            target_ep3(r3, r3, r3, x) - three,
            target_ep4(r3, r3, r3, x) - three,
        };
        for (double d : diffs) {
            worst = std::max(worst, std::abs(d));
        }
    }
    return {worst <= 1e-15, "max deviation " + num(worst) + " on 101 phases"};
}

Outcome parity_probe() {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double p = i / 20.0;
            const double phi = -kPi + j * (2.0 * kPi / 20.0);
            const double want = 0.5 + std::sqrt(p * (1.0 - p)) * std::cos(phi);
            worst = std::max(worst, std::abs(hadamard_parity_probe(p, phi) - want));
        }
    }
    return {worst < 1e-12, "max deviation " + num(worst) + " on 21x21 grid"};
}

struct Criterion {
    int id;
    const char *name;
    std::function<Outcome()> run;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all{
        {1, "propagator correctness", propagator_correctness},
        {2, "picture equivalence", picture_equivalence},
        {3, "gradient exactness", gradient_exactness},
        {4, "A/B waveform symmetry", symmetry},
        {5, "training reproduction", training_reproduction},
        {6, "generalization phi", [] { return generalization(PhaseOffset::phi, 0.05); }},
        {7, "generalization theta",
         [] { return generalization(PhaseOffset::theta, 0.08); }},
        {8, "generalization xi", [] { return generalization(PhaseOffset::xi, 0.10); }},
        {9, "target identities", target_identities},
        {10, "parity probe", parity_probe},
    };
    return all;
}

} // namespace

int main(int argc, char **argv) {
    std::optional<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    bool any = false;
    bool all_pass = true;
    for (const auto &c : criteria()) {
        if (only && *only != c.id) {
            continue;
        }
        any = true;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("error: ") + e.what()};
        }
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name, o.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && o.pass;
    }
    if (!any) {
        std::fprintf(stderr, "no such criterion\n");
        return 2;
    }
    return all_pass ? 0 : 1;
}
