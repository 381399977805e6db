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
#include "svbench/membench.hpp"

#include "kernels/kernel_common.hpp"
#include "svbench/error.hpp"
#include "svbench/stats.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <new>
#include <string>

namespace svbench {

std::int64_t SteadyClock::now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::int64_t SteadyClock::tick_ns() const {
    using period = std::chrono::steady_clock::period;
    const auto ns = static_cast<std::int64_t>(period::num * 1'000'000'000LL / period::den);
    return std::max<std::int64_t>(ns, 1);
}

void ManualClock::script_passes(std::size_t passes, std::int64_t elapsed_ns) {
    std::int64_t t = scripted_.empty() ? current_ : scripted_.back();
    for (std::size_t i = 0; i < passes; ++i) {
        scripted_.push_back(t);
        t += elapsed_ns;
        scripted_.push_back(t);
    }
}

std::int64_t ManualClock::now_ns() {
    if (!scripted_.empty()) {
        current_ = scripted_.front();
        scripted_.pop_front();
        return current_;
    }
    current_ += step_ns_;
    return current_;
}

double copy_gbs(std::uint64_t buffer_bytes, double seconds) noexcept {
    return 2.0 * static_cast<double>(buffer_bytes) / seconds / 1e9;
}

double percent_of_peak(double gbs, double peak_gbs) noexcept { return 100.0 * gbs / peak_gbs; }

BandwidthReport aggregate_bandwidth(std::uint64_t buffer_bytes,
                                    std::span<const double> trial_seconds,
                                    std::span<const unsigned> exclude,
                                    std::optional<double> peak_gbs) {
    BandwidthReport r;
    r.buffer_bytes = buffer_bytes;
    r.timed_passes = static_cast<unsigned>(trial_seconds.size());
    r.trial_seconds.assign(trial_seconds.begin(), trial_seconds.end());
    for (double s : trial_seconds) {
        r.trial_gbs.push_back(copy_gbs(buffer_bytes, s));
    }
    r.excluded.assign(exclude.begin(), exclude.end());
    std::sort(r.excluded.begin(), r.excluded.end());
    r.excluded.erase(std::unique(r.excluded.begin(), r.excluded.end()), r.excluded.end());
    for (unsigned k : r.excluded) {
        if (k < 1 || k > r.timed_passes) {
            throw Error(Errc::InvalidPlan, "excluded trial " + std::to_string(k) +
                                               " is not in 1.." +
                                               std::to_string(r.timed_passes));
        }
    }
    std::vector<double> kept;
    for (unsigned i = 0; i < r.timed_passes; ++i) {
        if (!std::binary_search(r.excluded.begin(), r.excluded.end(), i + 1)) {
            kept.push_back(r.trial_gbs[i]);
        }
    }
    if (kept.empty()) {
        throw Error(Errc::InvalidPlan, "every trial is excluded");
    }
    const SampleStats st = summarize(kept);
    r.mean_gbs = st.mean;
    r.sigma_gbs = st.sigma;
    if (peak_gbs) {
        if (!(*peak_gbs > 0.0)) {
            throw Error(Errc::NonPositiveMachineParameter, "peak bandwidth must be positive");
        }
        r.percent_of_peak = percent_of_peak(r.mean_gbs, *peak_gbs);
    }
    return r;
}

namespace {

struct FreeDeleter {
    void operator()(float *p) const noexcept { ::operator delete[](p, std::align_val_t{64}); }
};
using Buffer = std::unique_ptr<float[], FreeDeleter>;

Buffer allocate(std::size_t count) {
    try {
        return Buffer(static_cast<float *>(
            ::operator new[](count * sizeof(float), std::align_val_t{64})));
    } catch (const std::bad_alloc &) {
        throw Error(Errc::AllocationFailure,
                    "cannot allocate " + std::to_string(count * sizeof(float)) + " byte buffer");
    }
}

double checksum(const float *p, std::size_t count) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sum += p[i];
    }
    return sum;
}

} // namespace

BandwidthReport stream_probe(const StreamConfig &config, Clock &clock) {
    if (config.trials < 1) {
        throw Error(Errc::InvalidPlan, "stream probe needs at least one trial");
    }
    const std::size_t count = config.buffer_bytes / sizeof(float);
    if (count == 0) {
        throw Error(Errc::InvalidPlan, "stream buffer must hold at least one float");
    }
    const std::uint64_t bytes = count * sizeof(float);

    Buffer src = allocate(count);
    Buffer dst = allocate(count);
    DispatchOptions dispatch;
    if (config.parallel) {
        dispatch = DispatchOptions::parallel(config.threads);
    }
    // First touch happens here, under the same dispatch as the copy.
    detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
        for (Index i = begin; i < end; ++i) {
            src[i] = static_cast<float>(i & 1023U) * 0.25F;
            dst[i] = 0.0F;
        }
    });

    const auto pass = [&] {
        detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
            std::copy(src.get() + begin, src.get() + end, dst.get() + begin);
        });
    };
    for (unsigned w = 0; w < config.warmup; ++w) {
        pass();
    }

    std::vector<double> seconds;
    const std::int64_t min_ns = 100 * clock.tick_ns();
    for (unsigned t = 0; t < config.trials; ++t) {
        const std::int64_t t0 = clock.now_ns();
        pass();
        const std::int64_t t1 = clock.now_ns();
        const std::int64_t elapsed = t1 - t0;
        if (elapsed < min_ns) {
            throw Error(Errc::TimerResolutionTooCoarse,
                        "pass took " + std::to_string(elapsed) + " ns, below 100 ticks of " +
                            std::to_string(clock.tick_ns()) + " ns");
        }
        seconds.push_back(static_cast<double>(elapsed) / 1e9);
    }

    BandwidthReport r = aggregate_bandwidth(bytes, seconds, config.exclude, config.peak_gbs);
    r.warmup_passes = config.warmup;
    r.checksum = checksum(dst.get(), count);
    r.checksum_ok = r.checksum == checksum(src.get(), count);
    return r;
}

BandwidthReport stream_probe(const StreamConfig &config) {
    SteadyClock clock;
    return stream_probe(config, clock);
}

} // namespace svbench
