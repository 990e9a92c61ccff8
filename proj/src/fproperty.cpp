#include "wsa/fproperty.hpp"

namespace wsa {

std::string to_string(FPropertyStatus s) {
    switch (s) {
    case FPropertyStatus::satisfied_witness: return "satisfied-witness";
    case FPropertyStatus::refuted_certified: return "refuted-certified";
    case FPropertyStatus::refuted_on_window: return "refuted-on-window";
    case FPropertyStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(EtaDirection d) {
    return d == EtaDirection::increasing ? "increasing" : "decreasing";
}

std::string to_string(RegularityStatus s) {
    switch (s) {
    case RegularityStatus::regular_certified: return "REGULAR_CERTIFIED";
    case RegularityStatus::not_regular_certified: return "NOT_REGULAR_CERTIFIED";
    case RegularityStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

} // namespace wsa
