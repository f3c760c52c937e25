#include "omcube/budget.hpp"

#include "omcube/error.hpp"

namespace omcube {

Deadline Deadline::after_seconds(double seconds) {
    Deadline d;
    d.until_ = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
}

bool Deadline::expired() const { return until_ && std::chrono::steady_clock::now() >= *until_; }

void Deadline::check() const {
    if (!until_) return;
    if (ticks_++ % 4096 != 0) return;
    if (expired()) fail(ErrorCode::resource, "time budget exhausted");
}

}  // namespace omcube
