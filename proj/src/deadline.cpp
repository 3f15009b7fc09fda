#include "corelab/deadline.hpp"

#include "corelab/error.hpp"

namespace corelab {

Deadline Deadline::after_seconds(double secs) {
    Deadline d;
    d.until_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(secs));
    return d;
}

bool Deadline::expired() const {
    return until_ && Clock::now() >= *until_;
}

void Deadline::check() const {
    if (expired()) throw BudgetExceeded("time budget exceeded");
}

} // namespace corelab
