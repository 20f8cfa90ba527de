#pragma once

// Finite avoidability search: is there an r-coloring of the domain with no
// monochromatic configuration of a pattern?

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symramsey/pattern.hpp"
#include "symramsey/window.hpp"

namespace symramsey {

/// positive: [1, N]. z: [-N, N] with every configuration touching 0 dropped
/// (0 is still colored, always with color 0 in certificates).
enum class Domain { positive, z };

std::string to_string(Domain d);
/// "positive" or "z"; throws ValidationError.
Domain parse_domain(const std::string& s);
Window domain_window(Domain d, std::int64_t n);

struct SearchOptions {
    Domain domain = Domain::positive;
    unsigned workers = 1;
    /// Bound on the integers stored across all precomputed configurations.
    std::size_t max_tuple_entries = std::size_t{1} << 26;
};

struct SearchStats {
    /// Accepted color assignments, counted in sequential search order.
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
    double elapsed_ms = 0;
    /// Distinct occupied sets the search constrains.
    std::size_t tuples = 0;
};

struct SearchOutcome {
    std::string pattern;
    int r = 1;
    std::int64_t n = 0;
    Domain domain = Domain::positive;
    bool avoidable = false;
    /// Lexicographically least avoiding coloring, first domain element colored 0.
    std::optional<Coloring> coloring;
    SearchStats stats;
};

/// Backtracking over the domain in increasing order. Results (coloring, node
/// count, depth) do not depend on options.workers.
SearchOutcome decide(const PatternSpec& pattern, int r, std::int64_t n, const SearchOptions& options = {});

/// decide over an arbitrary window; options.domain == z still drops
/// configurations through 0. The outcome's n is the window size.
SearchOutcome decide_window(const PatternSpec& pattern, int r, Window w, const SearchOptions& options = {});

/// Exhaustive scan of all colorings in lexicographic order using the
/// independent matcher. Refuses (ResourceError) when r^(size-1) > 2^24.
SearchOutcome brute_force_decide(const PatternSpec& pattern, int r, std::int64_t n, Domain domain = Domain::positive);

/// True when no configuration of the domain is monochromatic under c,
/// checked by a fresh scan.
bool verify_avoiding(const PatternSpec& pattern, const Coloring& c, Domain domain);

struct RadoResult {
    std::string pattern;
    int r = 1;
    std::int64_t n_max = 0;
    Domain domain = Domain::positive;
    /// Least N with every coloring forced; nullopt when none up to n_max.
    std::optional<std::int64_t> number;
    /// Avoiding coloring for number-1, or for n_max when the bound is exceeded.
    std::optional<Coloring> certificate;
    /// decide outcome for N = 1, 2, ... as searched.
    std::vector<bool> avoidable_by_n;
    SearchStats unavoidable_stats;
};

RadoResult rado_number(const PatternSpec& pattern, int r, std::int64_t n_max, const SearchOptions& options = {});

namespace detail {
/// Distinct occupied sets of the configurations in the domain, each sorted
/// ascending, ordered by (max element, set).
std::vector<std::vector<std::int64_t>> domain_tuples(const PatternSpec& pattern, Domain d, std::int64_t n,
                                                     std::size_t max_entries);
std::vector<std::vector<std::int64_t>> window_tuples(const PatternSpec& pattern, Window w, bool drop_zero,
                                                     std::size_t max_entries);
} // namespace detail

} // namespace symramsey
