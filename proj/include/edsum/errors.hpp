#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edsum {

enum class errc {
    order_mismatch,
    invalid_modulus,
    no_root,
    arithmetic,
    unsupported_order,
    invalid_order,
    degenerate_lattice,
    pole,
    not_a_multiplier,
    zero_divisor,
    excluded_ring,
    precision,
    not_unimodular,
    precondition,
    generation_failure,
    search_limit,
    construction,
    inadmissible_target,
};

std::string_view to_string(errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace edsum
