#include "gforge/verbose.hpp"
#include "gforge/interrupt.hpp"
#include "gforge/errors.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace gforge {

namespace {

std::atomic<int> g_level{0};
std::mutex g_sink_mutex;
VerboseSink g_sink; // empty -> stderr

std::atomic<bool> g_cancel{false};
std::atomic<int> g_cancel_after{0};

} // namespace

void SetVerbosityLevel(int level) { g_level.store(level); }

int VerbosityLevel() { return g_level.load(); }

void SetVerboseSink(VerboseSink sink) {
    std::lock_guard<std::mutex> lock(g_sink_mutex);
    g_sink = std::move(sink);
}

void Verbose(int level, const std::string& line) {
    // The countdown hook fires on every emission attempt so tests can pick an
    // exact interruption point independently of the verbosity level.
    int expected = g_cancel_after.load();
    while (expected > 0) {
        if (g_cancel_after.compare_exchange_weak(expected, expected - 1)) {
            if (expected == 1) RequestCancel();
            break;
        }
    }
    if (g_level.load() < level) return;
    std::lock_guard<std::mutex> lock(g_sink_mutex);
    if (g_sink) {
        g_sink(line);
    } else {
        std::cerr << line << "\n";
    }
}

void RequestCancel() { g_cancel.store(true); }

void ClearCancelRequest() { g_cancel.store(false); }

bool CancelRequested() { return g_cancel.load(); }

void CheckInterrupt() {
    if (g_cancel.load()) {
        g_cancel.store(false);
        throw Cancelled();
    }
}

void CancelAfterProgress(int count) { g_cancel_after.store(count); }

} // namespace gforge
