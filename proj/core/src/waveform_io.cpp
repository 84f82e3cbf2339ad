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
#include "qnn/waveform_io.hpp"

#include "qnn/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace qnn {

namespace {

std::string_view next_line(std::string_view &text) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

template <typename T> bool parse_exact(std::string_view s, T &out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

std::string format_shortest(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

std::string format_g17(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

std::string waveform_header(double dt, std::size_t n_steps) {
    return "# qnn-waveforms v1, dt=" + format_shortest(dt) +
           ", n_steps=" + std::to_string(n_steps) + ", units=rad/ns";
}

std::string format_waveforms(const ControlWaveforms &w) {
    std::string out;
    out.reserve(w.n_steps() * 140 + 128);
    out += waveform_header(w.dt(), w.n_steps());
    out += '\n';
    out += kWaveformColumns;
    out += '\n';
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_g17(static_cast<double>(k) * w.dt());
        for (Control c : kAllControls) {
            out += ',';
            out += format_g17(w.series(c)[k]);
        }
        out += '\n';
    }
    return out;
}

ControlWaveforms parse_waveforms(std::string_view text) {
    constexpr std::string_view kPrefix = "# qnn-waveforms v1, dt=";
    constexpr std::string_view kStepsTag = ", n_steps=";
    constexpr std::string_view kSuffix = ", units=rad/ns";

    const std::string_view header = next_line(text);
    if (!header.starts_with(kPrefix) || !header.ends_with(kSuffix)) {
        throw FormatError("line 1: not a qnn-waveforms v1 header");
    }
    std::string_view fields = header.substr(kPrefix.size());
    fields.remove_suffix(kSuffix.size());
    const auto tag = fields.find(kStepsTag);
    if (tag == std::string_view::npos) {
        throw FormatError("line 1: header lacks n_steps");
    }
    double dt = 0.0;
    std::size_t n_steps = 0;
    if (!parse_exact(fields.substr(0, tag), dt) || !(dt > 0.0) ||
        !std::isfinite(dt)) {
        throw FormatError("line 1: bad dt");
    }
    if (!parse_exact(fields.substr(tag + kStepsTag.size()), n_steps) ||
        n_steps == 0) {
        throw FormatError("line 1: bad n_steps");
    }
    if (header != waveform_header(dt, n_steps)) {
        throw FormatError("line 1: header is not in canonical form");
    }
    if (next_line(text) != kWaveformColumns) {
        throw FormatError("line 2: expected column line '" +
                          std::string(kWaveformColumns) + "'");
    }

    ControlWaveforms w(dt, n_steps);
    std::size_t row = 0;
    std::size_t line_no = 2;
    while (!text.empty()) {
        ++line_no;
        std::string_view line = next_line(text);
        if (line.empty() && text.empty()) {
            break;
        }
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (row >= n_steps) {
            throw FormatError(where + "more rows than n_steps=" +
                              std::to_string(n_steps));
        }
        std::array<std::string_view, 7> cells;
        std::size_t n = 0;
        while (true) {
            const auto comma = line.find(',');
            if (n == cells.size()) {
                throw FormatError(where + "too many columns");
            }
            cells[n++] = line.substr(0, comma);
            if (comma == std::string_view::npos) {
                break;
            }
            line.remove_prefix(comma + 1);
        }
        if (n != cells.size()) {
            throw FormatError(where + "expected 7 columns");
        }
        std::size_t step = 0;
        if (!parse_exact(cells[0], step) || step != row) {
            throw FormatError(where + "expected step " + std::to_string(row));
        }
        double t_start = 0.0;
        if (!parse_exact(cells[1], t_start)) {
            throw FormatError(where + "bad t_start");
        }
        for (std::size_t j = 0; j < kNumControls; ++j) {
            double v = 0.0;
            if (!parse_exact(cells[j + 2], v) || !std::isfinite(v)) {
                throw FormatError(where + "bad value for " +
                                  std::string(control_name(kAllControls[j])));
            }
            w.series(kAllControls[j])[row] = v;
        }
        ++row;
    }
    if (row != n_steps) {
        throw FormatError("expected " + std::to_string(n_steps) +
                          " rows, found " + std::to_string(row));
    }
    return w;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ControlWaveforms read_waveforms(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    try {
        return parse_waveforms(text);
    } catch (const FormatError &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path &path,
                       std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + tmp.string() + "'");
        }
        out.write(contents.data(),
                  static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw Error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot rename onto '" + path.string() + "'");
    }
}

void write_waveforms(const std::filesystem::path &path,
                     const ControlWaveforms &w) {
    write_file_atomic(path, format_waveforms(w));
}

} // namespace qnn
