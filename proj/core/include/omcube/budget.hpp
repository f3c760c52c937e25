#pragma once

#include <chrono>
#include <optional>

namespace omcube {

// Wall-clock budget for long searches. A default-constructed Deadline never expires.
class Deadline {
public:
    Deadline() = default;
    static Deadline after_seconds(double seconds);

    bool expired() const;
    // Throws Error(resource) once expired. Cheap enough to call in inner loops
    // because the clock is only sampled every few thousand calls.
    void check() const;

private:
    std::optional<std::chrono::steady_clock::time_point> until_;
    mutable unsigned ticks_ = 0;
};

}  // namespace omcube
