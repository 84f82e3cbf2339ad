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
 * Waveform persistence and small file helpers.
 *
 * Waveform files are CSV text:
 *
 *     # qnn-waveforms v1, dt=0.05, n_steps=3800, units=rad/ns
 *     step,t_start,K_A,K_B,eps_A,eps_B,zeta
 *     0,0,0.0025000000000000001,...
 *
 * Sample values carry 17 significant digits, which round-trips doubles.
 */
#pragma once

#include "qnn/dynamics.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qnn {

inline constexpr std::string_view kWaveformColumns =
    "step,t_start,K_A,K_B,eps_A,eps_B,zeta";

/// "# qnn-waveforms v1, dt=<dt>, n_steps=<N>, units=rad/ns"
std::string waveform_header(double dt, std::size_t n_steps);

std::string format_waveforms(const ControlWaveforms &w);
/// Throws FormatError on a bad header, column line, row or row count.
ControlWaveforms parse_waveforms(std::string_view text);

ControlWaveforms read_waveforms(const std::filesystem::path &path);
void write_waveforms(const std::filesystem::path &path,
                     const ControlWaveforms &w);

/// Shortest decimal string that parses back to `v`.
std::string format_shortest(double v);
/// Fixed 17-significant-digit form.
std::string format_g17(double v);

std::string read_text_file(const std::filesystem::path &path);
/// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const std::filesystem::path &path,
                       std::string_view contents);

} // namespace qnn
