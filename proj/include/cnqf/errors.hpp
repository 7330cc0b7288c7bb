#pragma once

#include <stdexcept>
#include <string>

namespace cnqf {

// Error taxonomy shared by all subsystems. Each failure mode the public
// operations can signal has exactly one code so tests can match on identity
// instead of message text.
enum class Errc {
    parse_error,
    validation_error,
    no_path,
    unknown_link,
    syntax_error,
    duplicate_policy_id,
    unknown_action_kind,
    bad_action_params,
    scope_error,
    capacity_violation,
    duplicate_allocation,
    unknown_session,
    unmapped_class,
    unknown_element,
    bad_params,
    illegal_state,
    illegal_transition,
    unknown_target,
    unresolved_scope,
    no_feasible_codec,
    unknown_entity,
    assertion_failure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cnqf
