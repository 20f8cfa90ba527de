#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symramsey/solutions.hpp"

namespace symramsey {

/// A monochromatic configuration found in a coloring.
struct Witness {
    SolutionTuple solution;
    int color = 0;
    std::string pattern;
    Window window;
};

/// Least monochromatic configuration (solution_less order), or nullopt when
/// the exhaustive scan finds none.
std::optional<Witness> find_monochromatic(const Coloring& coloring, const PatternSpec& pattern);

/// F_1..F_d from `family` and x_1 < ... < x_d such that
/// sigma_t(x) u sigma_t(F_i (.)_t x_i) u sigma_t(F_i) is monochromatic.
/// x_i avoids t and t+1, family members avoid t. depth must be 1 or 2.
std::optional<Witness> find_mixed_configuration(const Coloring& coloring, const PatternSpec& family, AffineShift t,
                                                unsigned depth);

/// Strictly increasing x, y, z, w of length depth with
/// FS(x) u FP(w) u (t + FS_{-t}(y)) u (t + sigma_{-t}(z)) monochromatic.
std::optional<Witness> find_quad_sequences(const Coloring& coloring, AffineShift t, unsigned depth);

struct ApRun {
    std::size_t length = 0;
    std::int64_t start = 0;
    std::int64_t step = 0;
    std::vector<std::int64_t> terms;
};

/// Longest arithmetic progression with positive step inside A, capped at
/// max_len; least (start, step) among the longest.
ApRun ap_longest(const std::set<std::int64_t>& A, std::size_t max_len);

} // namespace symramsey
