#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ktri {

/// Size guards for the exhaustive enumerators.
struct EnumerationLimits {
    std::size_t max_cells = 40;           // |lambda_cells| for enumerate_brute
    std::size_t max_tuple_cells = 40;     // m*k for enumerate_tuples
    std::uint64_t max_tree_count = 1'000'000;  // jonsson_count for enumerate_tree

    static EnumerationLimits unlimited();

    /// Parses `none` or a comma list such as `cells=50,tree=2000000`.
    /// Keys not mentioned keep their defaults.
    static EnumerationLimits parse(std::string_view text);

    /// Reads KTRI_GUARD; defaults when unset.
    static EnumerationLimits from_env();
};

}  // namespace ktri
