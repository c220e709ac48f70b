#include "catcoh/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace catcoh {

ParseError::ParseError(int line, int column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
}

std::string ValidationReport::summary(std::size_t max_lines) const {
    if (ok()) return "valid";
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& v : violations) {
        if (shown == max_lines) {
            out << "... (" << violations.size() - shown << " more)\n";
            break;
        }
        out << v << '\n';
        ++shown;
    }
    return out.str();
}

SimplexCap SimplexCap::from_environment() {
    SimplexCap cap;
    if (const char* env = std::getenv("CATCOH_SIMPLEX_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) cap.limit = static_cast<std::size_t>(v);
    }
    return cap;
}

}  // namespace catcoh
