#include "codegauntlet/time_source.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <thread>

namespace cg {

double TimeSource::time_call(const std::function<void()>& op) {
    const double t0 = mono_seconds();
    op();
    return mono_seconds() - t0;
}

std::string format_iso8601_utc(std::int64_t unix_seconds) {
    std::time_t t = static_cast<std::time_t>(unix_seconds);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string SystemTimeSource::now_iso8601_utc() {
    const auto now = std::chrono::system_clock::now();
    return format_iso8601_utc(std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count());
}

double SystemTimeSource::mono_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

void SystemTimeSource::sleep_seconds(double s) {
    if (s <= 0) return;
    std::this_thread::sleep_for(std::chrono::duration<double>(s));
}

FakeTimeSource::FakeTimeSource(std::int64_t epoch_unix_seconds) : epoch_(epoch_unix_seconds) {}

std::string FakeTimeSource::now_iso8601_utc() {
    return format_iso8601_utc(epoch_ + wall_ticks_++);
}

double FakeTimeSource::mono_seconds() { return mono_now_; }

double FakeTimeSource::time_call(const std::function<void()>& op) {
    op();
    double d = 0.0;
    if (!durations_.empty()) {
        d = durations_.front();
        durations_.pop_front();
    }
    mono_now_ += d;
    return d;
}

void FakeTimeSource::sleep_seconds(double s) {
    if (s <= 0) return;
    sleeps_.push_back(s);
    mono_now_ += s;
}

}  // namespace cg
