#ifndef KOP_ERROR_HPP
#define KOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kop {

enum class errc {
    asymmetric_rotation,
    duplicate_edge,
    euler_violation,
    bad_hint,
    malformed_layer,
    not_outerplanar,
    fact_violation,
    cycle_created,
    not_spanning,
    too_large,
    too_few_edges,
    unknown_name,
    unsatisfiable,
    parse_error,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace kop

#endif
