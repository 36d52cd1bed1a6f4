#include "edsum/errors.hpp"

namespace edsum {

std::string_view to_string(errc code) {
    switch (code) {
    case errc::order_mismatch: return "order mismatch";
    case errc::invalid_modulus: return "invalid modulus";
    case errc::no_root: return "no square root";
    case errc::arithmetic: return "arithmetic error";
    case errc::unsupported_order: return "unsupported order";
    case errc::invalid_order: return "invalid order";
    case errc::degenerate_lattice: return "degenerate lattice";
    case errc::pole: return "pole";
    case errc::not_a_multiplier: return "not a multiplier";
    case errc::zero_divisor: return "zero modulus";
    case errc::excluded_ring: return "excluded ring";
    case errc::precision: return "precision failure";
    case errc::not_unimodular: return "not unimodular";
    case errc::precondition: return "precondition violated";
    case errc::generation_failure: return "generation failure";
    case errc::search_limit: return "search limit exceeded";
    case errc::construction: return "construction invariant violated";
    case errc::inadmissible_target: return "inadmissible target";
    }
    return "unknown error";
}

}  // namespace edsum
