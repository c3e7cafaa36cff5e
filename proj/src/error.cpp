#include "kop/error.hpp"

namespace kop {

const char* errc_name(errc c) {
    switch (c) {
        case errc::asymmetric_rotation: return "AsymmetricRotation";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::euler_violation: return "EulerViolation";
        case errc::bad_hint: return "BadHint";
        case errc::malformed_layer: return "MalformedLayer";
        case errc::not_outerplanar: return "NotOuterplanar";
        case errc::fact_violation: return "FactViolation";
        case errc::cycle_created: return "CycleCreated";
        case errc::not_spanning: return "NotSpanning";
        case errc::too_large: return "TooLarge";
        case errc::too_few_edges: return "TooFewEdges";
        case errc::unknown_name: return "UnknownName";
        case errc::unsatisfiable: return "Unsatisfiable";
        case errc::parse_error: return "ParseError";
    }
    return "Error";
}

} // namespace kop
