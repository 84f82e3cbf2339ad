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
#include "qnn/qcore.hpp"
#include "qnn/targets.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace qnn;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR2 = 1.0 / std::sqrt(2.0);
const double kR3 = 1.0 / std::sqrt(3.0);

double c2(double x) {
    const double c = std::cos(x / 2.0);
    return c * c;
}

/// A three-magnitude target with its magnitudes in argument order.
struct ThreeTarget {
    std::string name;
    std::function<double(double, double, double, double)> fn;
    /// Literal formula in the same argument order.
    std::function<double(double, double, double, double)> oracle;
};

std::vector<ThreeTarget> three_targets() {
    using std::abs;
    return {
        {"bp1", target_bp1,
         [](double a00, double a01, double a11, double x) {
             return 2 * abs(1.0 / 3 - a01 * a01) * a00 * a00 * a11 * a11 +
                    3 * abs(1.0 / 3 - a00 * a00) * a01 * a01 * a11 * a11 +
                    2 * a00 * a11 * c2(x);
         }},
        {"bp2", target_bp2,
         [](double a00, double a10, double a11, double x) {
             return 2 * abs(1.0 / 3 - a10 * a10) * a00 * a00 * a11 * a11 +
                    3 * abs(1.0 / 3 - a00 * a00) * a10 * a10 * a11 * a11 +
                    2 * a00 * a11 * c2(x);
         }},
        {"ep1", target_ep1,
         [](double a00, double a01, double a10, double x) {
             return 2 * abs(1.0 / 3 - a00 * a00) * a01 * a01 * a10 * a10 +
                    3 * abs(1.0 / 3 - a01 * a01) * a00 * a00 * a10 * a10 +
                    2 * a01 * a10 * c2(x);
         }},
        {"ep2", target_ep2,
         [](double a01, double a10, double a11, double x) {
             return 2 * abs(1.0 / 3 - a11 * a11) * a01 * a01 * a10 * a10 +
                    3 * abs(1.0 / 3 - a01 * a01) * a11 * a11 * a10 * a10 +
                    2 * a01 * a10 * c2(x);
         }},
        {"ep3", target_ep3,
         [](double a01, double a10, double a11, double x) {
             return 2 * abs(1.0 / 3 - a11 * a11) * a10 * a10 * a01 * a01 +
                    3 * abs(1.0 / 3 - a10 * a10) * a11 * a11 * a01 * a01 +
                    2 * a10 * a01 * c2(x);
         }},
        {"ep4", target_ep4,
         [](double a00, double a01, double a10, double x) {
             return 2 * abs(1.0 / 3 - a00 * a00) * a10 * a10 * a01 * a01 +
                    3 * abs(1.0 / 3 - a10 * a10) * a00 * a00 * a01 * a01 +
                    2 * a10 * a01 * c2(x);
         }},
    };
}

struct TwoTarget {
    std::string name;
    std::function<double(double, double, double)> fn;
    std::function<double(double, double, double)> oracle;
};

std::vector<TwoTarget> two_targets() {
    return {
        {"bell", target_bell,
         [](double a00, double a11, double x) {
             const double d = 0.5 - a00 * a00;
             return 2 * d * d * a11 * a11 + 2 * a00 * a11 * c2(x);
         }},
        {"epr", target_epr,
         [](double a01, double a10, double x) {
             const double d = 0.5 - a01 * a01;
             return 2 * d * d * a10 * a10 + 2 * a01 * a10 * c2(x);
         }},
        {"eprx", target_eprx,
         [](double a01, double a10, double x) {
             const double d = 0.5 - a10 * a10;
             return 2 * d * d * a01 * a01 + 2 * a10 * a01 * c2(x);
         }},
    };
}

std::array<double, 3> random_unit3(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::array<double, 3> v{std::abs(n(rng)), std::abs(n(rng)), std::abs(n(rng))};
    const double s = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double &x : v) {
        x /= s;
    }
    return v;
}

} // namespace

TEST(MeasureIndex, ByPhaseOffset) {
    EXPECT_EQ(measure_index(FamilyKind::BELL), 3u);
    EXPECT_EQ(measure_index(FamilyKind::BP1), 3u);
    EXPECT_EQ(measure_index(FamilyKind::BP2), 3u);
    EXPECT_EQ(measure_index(FamilyKind::EPR), 2u);
    EXPECT_EQ(measure_index(FamilyKind::EP1), 2u);
    EXPECT_EQ(measure_index(FamilyKind::EP2), 2u);
    EXPECT_EQ(measure_index(FamilyKind::EPRX), 1u);
    EXPECT_EQ(measure_index(FamilyKind::EP3), 1u);
    EXPECT_EQ(measure_index(FamilyKind::EP4), 1u);
    EXPECT_EQ(phase_offset(FamilyKind::EP2), PhaseOffset::theta);
    EXPECT_EQ(phase_offset(FamilyKind::EP4), PhaseOffset::xi);
}

TEST(TargetEqualBell, Examples) {
    EXPECT_NEAR(target_equal_bell(0.0), 1.0, 1e-15);
    EXPECT_NEAR(target_equal_bell(kPi), 0.0, 1e-15);
    EXPECT_NEAR(target_equal_bell(-kPi / 2), 0.5, 1e-15);
}

TEST(TwoAmplitudeTargets, FrozenValues) {
    EXPECT_NEAR(target_bell(0.6, 0.8, kPi / 2), 0.505088, 1e-14);
    EXPECT_NEAR(target_bell(1.0, 0.0, 1.234), 0.0, 1e-15);
    EXPECT_NEAR(target_epr(0.8, 0.6, 0.0), 0.974112, 1e-14);
    EXPECT_NEAR(target_epr(1.0, 0.0, 0.3), 0.0, 1e-15);
    EXPECT_NEAR(target_eprx(0.6, 0.8, kPi), 0.014112, 1e-14);
    EXPECT_NEAR(target_eprx(0.0, 1.0, 0.3), 0.0, 1e-15);
}

TEST(TwoAmplitudeTargets, ReduceToCosineAtEqualAmplitudes) {
    for (double x = -kPi; x <= kPi; x += 0.1) {
        EXPECT_NEAR(target_bell(kR2, kR2, x), target_equal_bell(x), 1e-15);
        EXPECT_NEAR(target_epr(kR2, kR2, x), c2(x), 1e-15);
        EXPECT_NEAR(target_eprx(kR2, kR2, x), c2(x), 1e-15);
    }
}

TEST(ThreeAmplitudeTargets, FrozenValues) {
    for (const auto &t : three_targets()) {
        EXPECT_NEAR(t.fn(kR3, kR3, kR3, 0.0), 2.0 / 3.0, 1e-15) << t.name;
    }
    // BP2 with a10 = 0 and a00 = a11 = 1/sqrt2.
    EXPECT_NEAR(target_bp2(kR2, 0.0, kR2, kPi), 1.0 / 6.0, 1e-15);
    // EP1 with a00 = 0 keeps the 3|1/3 - a01^2| a00^2 term at zero but not
    // the first one.
    EXPECT_NEAR(target_ep1(0.0, kR2, kR2, kPi), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(target_ep1(0.0, kR2, kR2, 0.0), 7.0 / 6.0, 1e-15);
    EXPECT_NEAR(target_ep2(kR2, kR2, 0.0, 0.0), 7.0 / 6.0, 1e-15);
    EXPECT_NEAR(target_ep3(kR2, kR2, 0.0, kPi), 1.0 / 6.0, 1e-15);
    // EP4 with a10 = 0: only the a00^2 a01^2 term survives, for every xi.
    for (double xi : {-2.0, 0.0, 1.0, kPi}) {
        EXPECT_NEAR(target_ep4(kR2, kR2, 0.0, xi), 0.25, 1e-15);
    }
    // Amplitude on a single basis state.
    EXPECT_NEAR(target_bp1(1.0, 0.0, 0.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(target_bp2(0.0, 0.0, 1.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(target_ep1(1.0, 0.0, 0.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(target_ep2(0.0, 0.0, 1.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(target_ep3(0.0, 1.0, 0.0, 0.7), 0.0, 1e-15);
    EXPECT_NEAR(target_ep4(0.0, 1.0, 0.0, 0.7), 0.0, 1e-15);
}

TEST(Targets, MatchLiteralFormulasOnRandomInputs) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_unit3(rng);
        const double x = phase(rng);
        for (const auto &t : three_targets()) {
            EXPECT_NEAR(t.fn(a[0], a[1], a[2], x), t.oracle(a[0], a[1], a[2], x),
                        1e-14)
                << t.name;
        }
        const double n = std::hypot(a[0], a[1]);
        for (const auto &t : two_targets()) {
            EXPECT_NEAR(t.fn(a[0] / n, a[1] / n, x),
                        t.oracle(a[0] / n, a[1] / n, x), 1e-14)
                << t.name;
        }
    }
}

TEST(Targets, EvenAndPeriodicInPhase) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_unit3(rng);
        const double x = phase(rng);
        for (const auto &t : three_targets()) {
            const double v = t.fn(a[0], a[1], a[2], x);
            EXPECT_NEAR(v, t.fn(a[0], a[1], a[2], -x), 1e-15) << t.name;
            EXPECT_NEAR(v, t.fn(a[0], a[1], a[2], x + 2 * kPi), 1e-15) << t.name;
        }
        const double n = std::hypot(a[0], a[1]);
        for (const auto &t : two_targets()) {
            const double v = t.fn(a[0] / n, a[1] / n, x);
            EXPECT_NEAR(v, t.fn(a[0] / n, a[1] / n, -x), 1e-15) << t.name;
            EXPECT_NEAR(v, t.fn(a[0] / n, a[1] / n, x + 2 * kPi), 1e-15)
                << t.name;
        }
    }
}

TEST(Targets, RejectUnnormalizedOrNegativeMagnitudes) {
    EXPECT_THROW(target_bell(0.6, 0.6, 0.0), DomainError);
    EXPECT_THROW(target_epr(-0.6, 0.8, 0.0), DomainError);
    EXPECT_THROW(target_eprx(1.0, 1e-4, 0.0), DomainError);
    EXPECT_THROW(target_bp1(0.5, 0.5, 0.5, 0.0), DomainError);
    EXPECT_THROW(target_ep3(kR3, kR3, NAN, 0.0), DomainError);
    EXPECT_NO_THROW(target_bell(0.6, 0.8 + 1e-12, 0.0));
}

TEST(HadamardParityProbe, Examples) {
    EXPECT_NEAR(hadamard_parity_probe(0.5, 0.0), 1.0, 1e-12);
    EXPECT_NEAR(hadamard_parity_probe(0.5, kPi / 2), 0.5, 1e-12);
    EXPECT_NEAR(hadamard_parity_probe(1.0, 0.7), 0.5, 1e-12);
    EXPECT_NEAR(hadamard_parity_probe(0.25, 0.0), 0.5 + std::sqrt(0.1875),
                1e-12);
}

TEST(HadamardParityProbe, MatchesClosedFormOnGrid) {
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double p = i / 20.0;
            const double phi = -kPi + j * (2 * kPi / 20.0);
            const double want = 0.5 + std::sqrt(p * (1 - p)) * std::cos(phi);
            EXPECT_NEAR(hadamard_parity_probe(p, phi), want, 1e-12)
                << "p=" << p << " phi=" << phi;
            EXPECT_NEAR(parity_closed_form(p, phi), want, 1e-15);
        }
    }
}

TEST(HadamardParityProbe, RejectsOutOfRangeProbability) {
    EXPECT_THROW(hadamard_parity_probe(-0.01, 0.0), DomainError);
    EXPECT_THROW(hadamard_parity_probe(1.01, 0.0), DomainError);
    EXPECT_THROW(hadamard_parity_probe(NAN, 0.0), DomainError);
    EXPECT_THROW(parity_closed_form(2.0, 0.0), DomainError);
}
