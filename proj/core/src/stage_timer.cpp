#include "cyclequiv/stage_timer.hpp"

namespace cyclequiv {

std::string_view stage_name(Stage s) {
    switch (s) {
        case Stage::Ancestry:
            return "ancestry";
        case Stage::CmagPart1:
            return "cmag_part1";
        case Stage::CmagPart2:
            return "cmag_part2";
        case Stage::CpagInit:
            return "cpag_init";
        case Stage::UStructures:
            return "u_structures";
        case Stage::CpagPart2:
            return "cpag_part2";
    }
    return "?";
}

double StageTimings::sum() const {
    double total = 0;
    for (double t : micros) total += t;
    return total;
}

}  // namespace cyclequiv
