// Copyright 2026 The svbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * STREAM-style copy bandwidth probe.
 *
 * Each pass copies a float32 source buffer into a destination buffer of the
 * same size and counts 2 x buffer_bytes of traffic (one read, one write).
 */
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

namespace svbench {

/// Monotonic time source in integer nanoseconds.
class Clock {
public:
    virtual ~Clock() = default;
    [[nodiscard]] virtual std::int64_t now_ns() = 0;
    /// Smallest representable step, in nanoseconds.
    [[nodiscard]] virtual std::int64_t tick_ns() const { return 1; }
};

/// std::chrono::steady_clock.
class SteadyClock final : public Clock {
public:
    [[nodiscard]] std::int64_t now_ns() override;
    [[nodiscard]] std::int64_t tick_ns() const override;
};

/// Deterministic clock for tests. Returns scripted timestamps in order,
/// then keeps advancing by step_ns per call.
class ManualClock final : public Clock {
public:
    explicit ManualClock(std::int64_t step_ns = 0, std::int64_t tick_ns = 1)
        : step_ns_(step_ns), tick_ns_(tick_ns) {}

    void script(std::initializer_list<std::int64_t> stamps) {
        scripted_.insert(scripted_.end(), stamps);
    }
    /// Makes every timed pass (two reads) last exactly elapsed_ns.
    void script_passes(std::size_t passes, std::int64_t elapsed_ns);

    [[nodiscard]] std::int64_t now_ns() override;
    [[nodiscard]] std::int64_t tick_ns() const override { return tick_ns_; }

private:
    std::deque<std::int64_t> scripted_;
    std::int64_t current_ = 0;
    std::int64_t step_ns_;
    std::int64_t tick_ns_;
};

inline constexpr std::uint64_t kDefaultStreamBytes = std::uint64_t{512} << 20;

struct StreamConfig {
    std::uint64_t buffer_bytes = kDefaultStreamBytes;
    unsigned warmup = 10;
    unsigned trials = 5;
    std::vector<unsigned> exclude; ///< 1-based trial numbers
    std::optional<double> peak_gbs;
    bool parallel = false;
    unsigned threads = 0; ///< 0 = hardware concurrency
};

struct BandwidthReport {
    std::uint64_t buffer_bytes = 0;
    unsigned warmup_passes = 0;
    unsigned timed_passes = 0;
    std::vector<double> trial_seconds;
    std::vector<double> trial_gbs;
    std::vector<unsigned> excluded; ///< 1-based, sorted, unique
    double mean_gbs = 0.0;
    double sigma_gbs = 0.0;
    std::optional<double> percent_of_peak;
    double checksum = 0.0; ///< sum of the destination after the last pass
    bool checksum_ok = false;
};

/// (2 * bytes) / seconds / 1e9.
[[nodiscard]] double copy_gbs(std::uint64_t buffer_bytes, double seconds) noexcept;

/// 100 * gbs / peak_gbs.
[[nodiscard]] double percent_of_peak(double gbs, double peak_gbs) noexcept;

/// Builds the report statistics from per-trial times. exclude entries must
/// lie in 1..trial_seconds.size() and leave at least one trial
/// (InvalidPlan otherwise).
[[nodiscard]] BandwidthReport aggregate_bandwidth(std::uint64_t buffer_bytes,
                                                  std::span<const double> trial_seconds,
                                                  std::span<const unsigned> exclude = {},
                                                  std::optional<double> peak_gbs = {});

/// Runs warmup + trials copy passes; only timed passes are reported.
/// Throws AllocationFailure, TimerResolutionTooCoarse (a pass shorter than
/// 100 clock ticks) or InvalidPlan.
[[nodiscard]] BandwidthReport stream_probe(const StreamConfig &config, Clock &clock);
[[nodiscard]] BandwidthReport stream_probe(const StreamConfig &config);

} // namespace svbench
