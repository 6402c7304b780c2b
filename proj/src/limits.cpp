#include "ktri/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include "ktri/errors.hpp"

namespace ktri {

EnumerationLimits EnumerationLimits::unlimited() {
    EnumerationLimits out;
    out.max_cells = std::numeric_limits<std::size_t>::max();
    out.max_tuple_cells = std::numeric_limits<std::size_t>::max();
    out.max_tree_count = std::numeric_limits<std::uint64_t>::max();
    return out;
}

EnumerationLimits EnumerationLimits::parse(std::string_view text) {
    if (text == "none") return unlimited();
    EnumerationLimits out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw DomainError("KTRI_GUARD: expected key=value, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view number = item.substr(eq + 1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
        if (ec != std::errc{} || ptr != number.data() + number.size()) {
            throw DomainError("KTRI_GUARD: bad number '" + std::string(number) + "'");
        }
        if (key == "cells") {
            out.max_cells = value;
        } else if (key == "tuples") {
            out.max_tuple_cells = value;
        } else if (key == "tree") {
            out.max_tree_count = value;
        } else {
            throw DomainError("KTRI_GUARD: unknown key '" + std::string(key) + "'");
        }
    }
    return out;
}

EnumerationLimits EnumerationLimits::from_env() {
    const char* value = std::getenv("KTRI_GUARD");
    return value == nullptr ? EnumerationLimits{} : parse(value);
}

}  // namespace ktri
