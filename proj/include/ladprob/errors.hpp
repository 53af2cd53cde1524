#ifndef LADPROB_ERRORS_HPP
#define LADPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ladprob {

/// Base error carrying a short machine-parsable code alongside the message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// The conditioning event has count zero (e.g. n > d_Y * d_Z).
struct impossible_event : error {
    explicit impossible_event(const std::string& msg) : error("E_IMPOSSIBLE", msg) {}
};

/// A size field required by the selected case is absent.
struct missing_field : error {
    explicit missing_field(const std::string& field)
        : error("E_MISSING_FIELD", "required size field '" + field + "' is absent") {}
};

/// Exhaustive enumeration or pattern budget exceeded.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& msg) : error("E_CAP", msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("E_PARSE", msg) {}
};

struct unsatisfiable_instance : error {
    explicit unsatisfiable_instance(const std::string& msg) : error("E_UNSAT", msg) {}
};

} // namespace ladprob

#endif
