#pragma once

#include <chrono>
#include <optional>

namespace corelab {

/// Wall-clock cutoff polled by long enumerations. Default-constructed means no limit.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    static Deadline after_seconds(double secs);

    bool expired() const;
    /// Throws BudgetExceeded once the cutoff has passed.
    void check() const;

private:
    std::optional<Clock::time_point> until_;
};

/// Limits shared by every exhaustive enumeration.
struct EnumLimits {
    std::size_t cap = 20'000'000;
    Deadline deadline{};
};

} // namespace corelab
