#pragma once

#include <stdexcept>
#include <string>

namespace qfx {

// Library error with a stable machine-readable code ("NonPrime",
// "NotSquareFree", ...) next to the human message.  Codes are the ones
// callers and tests dispatch on; messages are free-form.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Internal consistency failure: a condition the theory guarantees was
// violated, i.e. an implementation bug, never a data error.
class consistency_failure : public std::logic_error {
public:
    explicit consistency_failure(const std::string& message)
        : std::logic_error("consistency failure: " + message) {}
};

inline void check(bool cond, const char* code, const std::string& message) {
    if (!cond) throw error(code, message);
}

inline void internal_check(bool cond, const std::string& message) {
    if (!cond) throw consistency_failure(message);
}

}  // namespace qfx
