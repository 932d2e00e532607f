#pragma once

#include <stdexcept>
#include <string>

namespace extlab
{
    /// Raised when a step that a proven statement guarantees turns out to fail.
    /// Carries the full input state so the failure can be replayed.
    class TheoremRefutationAlarm : public std::runtime_error
    {
    public:
        explicit TheoremRefutationAlarm(const std::string &what) : std::runtime_error("theorem refutation alarm: " + what) {}
    };
}
