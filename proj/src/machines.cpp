#include "contmach/machines.hpp"

namespace contmach {

std::string to_string(Schedule schedule) {
    return schedule == Schedule::linear ? "linear" : "powers_of_two";
}

Schedule parse_schedule(std::string_view text) {
    if (text == "linear") {
        return Schedule::linear;
    }
    if (text == "powers_of_two") {
        return Schedule::powers_of_two;
    }
    throw std::invalid_argument("unknown schedule: " + std::string(text));
}

std::vector<Effort> schedule_efforts(Schedule schedule, Effort cap) {
    std::vector<Effort> out{0};
    if (schedule == Schedule::linear) {
        for (Effort n = 1; n <= cap; ++n) {
            out.push_back(n);
        }
        return out;
    }
    for (Effort n = 1; n <= cap; n *= 2) {
        out.push_back(n);
        if (n > cap / 2) {
            break;
        }
    }
    return out;
}

} // namespace contmach
