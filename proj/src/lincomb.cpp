#include "lincomb.hpp"

namespace mba {

std::string LinComb::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : entries_) {
        if (!first) out += " + ";
        first = false;
        out += scalar_str(c);
        out += "*";
        out += format_term(t);
    }
    return out;
}

}  // namespace mba
