#include "l2a/report.hpp"

namespace l2a {

std::string Report::summary() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.passed ? "pass " : "FAIL ";
        out += c.name + " (" + std::to_string(c.evaluated) + " evaluated";
        if (!c.passed) out += ", " + std::to_string(c.failures) + " failing; first at " + c.where + ": " + c.defect;
        out += ")";
        if (!c.note.empty()) out += " [" + c.note + "]";
        out += "\n";
    }
    return out;
}

}  // namespace l2a
