#include "cnqf/errors.hpp"

namespace cnqf {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::no_path: return "NoPath";
    case Errc::unknown_link: return "UnknownLink";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::duplicate_policy_id: return "DuplicatePolicyId";
    case Errc::unknown_action_kind: return "UnknownActionKind";
    case Errc::bad_action_params: return "BadActionParams";
    case Errc::scope_error: return "ScopeError";
    case Errc::capacity_violation: return "CapacityViolation";
    case Errc::duplicate_allocation: return "DuplicateAllocation";
    case Errc::unknown_session: return "UnknownSession";
    case Errc::unmapped_class: return "UnmappedClass";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::bad_params: return "BadParams";
    case Errc::illegal_state: return "IllegalState";
    case Errc::illegal_transition: return "IllegalTransition";
    case Errc::unknown_target: return "UnknownTarget";
    case Errc::unresolved_scope: return "UnresolvedScope";
    case Errc::no_feasible_codec: return "NoFeasibleCodec";
    case Errc::unknown_entity: return "UnknownEntity";
    case Errc::assertion_failure: return "AssertionFailure";
    }
    return "Error";
}

} // namespace cnqf
