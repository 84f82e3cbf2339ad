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
#include "qnn/config.hpp"

#include "qnn/errors.hpp"
#include "qnn/waveform_io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace qnn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() ||
        !std::isfinite(out)) {
        throw DomainError("expected a finite number, got '" + std::string(v) +
                          "'");
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw DomainError("expected a nonnegative integer, got '" +
                          std::string(v) + "'");
    }
    return out;
}

void assign(ExperimentConfig &cfg, std::string_view key,
            std::string_view value) {
    if (key == "dt") {
        cfg.dt = parse_real(value);
    } else if (key == "t_f") {
        cfg.t_f = parse_real(value);
    } else if (key == "learning_rate") {
        cfg.learning_rate = parse_real(value);
    } else if (key == "epochs") {
        cfg.epochs = parse_unsigned(value);
    } else if (key == "seed") {
        cfg.seed = parse_unsigned(value);
    } else if (key == "test_count") {
        cfg.test_count = parse_unsigned(value);
    } else if (key == "gradcheck_samples") {
        cfg.gradcheck_samples = parse_unsigned(value);
    } else if (key == "gradcheck_h") {
        cfg.gradcheck_h = parse_real(value);
    } else if (key == "out_dir") {
        cfg.out_dir = std::string(value);
    } else if (key == "K_A" || key == "K_B" || key == "eps_A" ||
               key == "eps_B" || key == "zeta") {
        cfg.initial[parse_control(key)] = parse_real(value);
    } else {
        throw DomainError("unknown key '" + std::string(key) + "'");
    }
}

} // namespace

std::size_t ExperimentConfig::n_steps() const {
    if (!(dt > 0.0) || !(t_f > 0.0)) {
        throw ConfigError("dt and t_f must be positive");
    }
    const double ratio = t_f / dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
        throw ConfigError("t_f / dt must be a positive integer (got " +
                          std::to_string(ratio) + ")");
    }
    return static_cast<std::size_t>(rounded);
}

TrainConfig ExperimentConfig::train_config() const {
    TrainConfig tc;
    tc.learning_rate = learning_rate;
    tc.epochs = epochs;
    tc.rng_seed = seed;
    tc.initial = initial;
    tc.dt = dt;
    tc.n_steps = n_steps();
    return tc;
}

void ExperimentConfig::validate() const {
    train_config().validate();
    if (test_count == 0) {
        throw ConfigError("test_count must be positive");
    }
    if (gradcheck_samples == 0) {
        throw ConfigError("gradcheck_samples must be positive");
    }
    if (!(gradcheck_h > 0.0)) {
        throw ConfigError("gradcheck_h must be positive");
    }
}

ExperimentConfig parse_config(std::string_view text, std::string_view source) {
    ExperimentConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    const auto fail = [&](const std::string &msg) {
        throw ConfigError(std::string(source) + ":" + std::to_string(line_no) +
                          ": " + msg);
    };
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{}
                                            : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail("expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            fail("expected 'key = value'");
        }
        if (!seen.emplace(key).second) {
            fail("duplicate key '" + std::string(key) + "'");
        }
        try {
            assign(cfg, key, value);
        } catch (const DomainError &e) {
            fail(e.what());
        }
    }
    line_no = 0;
    try {
        cfg.validate();
    } catch (const ConfigError &e) {
        throw ConfigError(std::string(source) + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    return parse_config(text, path.string());
}

std::string format_config(const ExperimentConfig &cfg) {
    std::ostringstream os;
    os << "dt = " << format_shortest(cfg.dt) << '\n'
       << "t_f = " << format_shortest(cfg.t_f) << '\n'
       << "learning_rate = " << format_shortest(cfg.learning_rate) << '\n'
       << "epochs = " << cfg.epochs << '\n'
       << "seed = " << cfg.seed << '\n';
    for (Control c : kAllControls) {
        os << control_name(c) << " = " << format_shortest(cfg.initial[c])
           << '\n';
    }
    os << "test_count = " << cfg.test_count << '\n'
       << "gradcheck_samples = " << cfg.gradcheck_samples << '\n'
       << "gradcheck_h = " << format_shortest(cfg.gradcheck_h) << '\n'
       << "out_dir = " << cfg.out_dir.string() << '\n';
    return os.str();
}

} // namespace qnn
