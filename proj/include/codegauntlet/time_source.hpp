#ifndef CODEGAUNTLET_TIME_SOURCE_HPP
#define CODEGAUNTLET_TIME_SOURCE_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

namespace cg {

// Wall/monotonic time and sleeping, behind one seam so passes can be driven
// by a deterministic clock in tests (byte-identical stores and reports need
// reproducible timestamps and durations).
class TimeSource {
  public:
    virtual ~TimeSource() = default;

    // Current UTC wall time, e.g. "2026-08-10T12:34:56Z".
    virtual std::string now_iso8601_utc() = 0;

    // Monotonic seconds since an arbitrary origin.
    virtual double mono_seconds() = 0;

    // Runs op() and returns the wall-clock seconds it took.
    virtual double time_call(const std::function<void()>& op);

    virtual void sleep_seconds(double s) = 0;
};

// steady_clock / system_clock implementation used by the real pipeline.
class SystemTimeSource final : public TimeSource {
  public:
    std::string now_iso8601_utc() override;
    double mono_seconds() override;
    void sleep_seconds(double s) override;
};

// Scripted clock for tests. Wall timestamps tick one second per query from a
// fixed epoch; time_call() still executes the operation but reports the next
// scripted duration; sleeps advance virtual time instantly and are logged.
class FakeTimeSource final : public TimeSource {
  public:
    explicit FakeTimeSource(std::int64_t epoch_unix_seconds = 1700000000);

    std::string now_iso8601_utc() override;
    double mono_seconds() override;
    double time_call(const std::function<void()>& op) override;
    void sleep_seconds(double s) override;

    void push_duration(double seconds) { durations_.push_back(seconds); }
    const std::vector<double>& sleeps() const { return sleeps_; }

  private:
    std::int64_t epoch_;
    std::int64_t wall_ticks_ = 0;
    double mono_now_ = 0.0;
    std::deque<double> durations_;
    std::vector<double> sleeps_;
};

// Formats a unix timestamp as ISO-8601 UTC with seconds precision.
std::string format_iso8601_utc(std::int64_t unix_seconds);

}  // namespace cg

#endif
