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
#include "qnn/experiments.hpp"

#include "qnn/errors.hpp"
#include "qnn/waveform_io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qnn {

namespace {

void ensure_directory(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error("cannot create output directory '" + dir.string() +
                    "': " + ec.message());
    }
}

std::string format_training_pairs_csv(std::span<const TrainingPair> pairs,
                                      const Evaluation &ev) {
    std::ostringstream os;
    os << "n,phi,target,output,abs_error\n";
    const auto phases = training_phases();
    for (std::size_t i = 0; i < ev.pairs.size(); ++i) {
        const auto &r = ev.pairs[i];
        os << i + 1 << ',' << format_g17(i < phases.size() ? phases[i] : 0.0)
           << ',' << format_g17(r.target) << ',' << format_g17(r.output)
           << ',' << format_g17(r.error) << '\n';
    }
    os << "# summary: pairs=" << pairs.size()
       << ", mean_rms=" << format_g17(ev.mean_rms) << '\n';
    return os.str();
}

} // namespace

std::string format_epochs_csv(const RunReport &report) {
    std::ostringstream os;
    os << "epoch,mean_rms\n";
    for (std::size_t e = 0; e < report.epoch_rms.size(); ++e) {
        os << e + 1 << ',' << format_g17(report.epoch_rms[e]) << '\n';
    }
    return os.str();
}

RunReport run_training(const ExperimentConfig &cfg,
                       const EpochCallback &on_epoch) {
    cfg.validate();
    const std::vector<TrainingPair> pairs = build_training_set();
    RunReport report = train(pairs, cfg.train_config(), on_epoch);

    ensure_directory(cfg.out_dir);
    write_waveforms(cfg.out_dir / "waveforms.csv", report.waveforms);
    write_file_atomic(cfg.out_dir / "epochs.csv", format_epochs_csv(report));
    write_file_atomic(cfg.out_dir / "training_pairs.csv",
                      format_training_pairs_csv(pairs,
                                                report.final_evaluation));
    return report;
}

TestReport run_test(const ControlWaveforms &w, PhaseOffset offset,
                    const ExperimentConfig &cfg) {
    TestReport report{build_test_set(offset, cfg.seed, cfg.test_count), {}};
    report.evaluation = evaluate(report.set.pairs, w);
    return report;
}

std::string test_csv_name(PhaseOffset offset) {
    return "test_" + std::string(phase_offset_name(offset)) + ".csv";
}

std::string format_test_csv(const TestReport &report) {
    std::ostringstream os;
    os << "family,a00,a01,a10,a11,phase,target,output,abs_error\n";
    const auto &states = report.set.states;
    const auto &results = report.evaluation.pairs;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto &s = states[i];
        const auto &r = results[i];
        os << family_name(s.kind);
        for (double a : s.magnitudes) {
            os << ',' << format_g17(a);
        }
        os << ',' << format_g17(s.phase) << ',' << format_g17(r.target) << ','
           << format_g17(r.output) << ',' << format_g17(r.error) << '\n';
    }
    const auto kinds = families_for(report.set.offset);
    os << "# summary: family_set=" << phase_offset_name(report.set.offset)
       << ", pairs=" << states.size()
       << ", mean_rms=" << format_g17(report.evaluation.mean_rms)
       << ", rejected=";
    for (std::size_t j = 0; j < kinds.size(); ++j) {
        os << (j ? "/" : "") << family_name(kinds[j]) << ':'
           << report.set.rejected[j];
    }
    os << '\n';
    return os.str();
}

double gradient_mismatch(double analytic, double finite_difference) {
    const double diff = std::abs(analytic - finite_difference);
    if (diff < 1e-10) {
        return 0.0;
    }
    return diff / std::max(std::abs(analytic), std::abs(finite_difference));
}

GradcheckReport run_gradcheck(const ExperimentConfig &cfg) {
    cfg.validate();
    const std::size_t n_steps = cfg.n_steps();

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> noise(-0.02, 0.02);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ControlWaveforms w(cfg.dt, n_steps, cfg.initial);
    for (Control c : kAllControls) {
        for (double &v : w.series(c)) {
            v += noise(rng);
        }
    }

    // One pair per family, with a random target so the loss is nonzero.
    std::vector<TrainingPair> pairs;
    std::vector<GradientSet> grads;
    for (FamilyKind kind : kAllFamilies) {
        const StateFamily fam = sample_family(kind, rng(), 1).samples.front();
        pairs.emplace_back(family_state(fam), measure_index(kind), unit(rng));
        grads.push_back(gradient(pairs.back(), w));
    }

    std::uniform_int_distribution<std::size_t> pick_pair(0, pairs.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_step(0, n_steps - 1);
    std::uniform_int_distribution<std::size_t> pick_control(0,
                                                            kNumControls - 1);

    GradcheckReport report;
    report.h = cfg.gradcheck_h;
    for (std::size_t s = 0; s < cfg.gradcheck_samples; ++s) {
        GradcheckEntry e;
        e.pair = pick_pair(rng);
        e.step = pick_step(rng);
        e.control = kAllControls[pick_control(rng)];
        e.analytic = grads[e.pair].series(e.control)[e.step];
        e.finite_difference =
            fd_gradient(pairs[e.pair], w, e.step, e.control, cfg.gradcheck_h);
        e.mismatch = gradient_mismatch(e.analytic, e.finite_difference);
        report.max_mismatch = std::max(report.max_mismatch, e.mismatch);
        const double scale =
            std::max(std::abs(e.analytic), std::abs(e.finite_difference));
        if (scale > 0.0) {
            report.max_raw_relative =
                std::max(report.max_raw_relative,
                         std::abs(e.analytic - e.finite_difference) / scale);
        }
        report.entries.push_back(e);
    }
    return report;
}

ProbeResult run_probe(double p, double phi) {
    ProbeResult r;
    r.circuit = hadamard_parity_probe(p, phi);
    r.closed_form = parity_closed_form(p, phi);
    r.difference = std::abs(r.circuit - r.closed_form);
    return r;
}

} // namespace qnn
