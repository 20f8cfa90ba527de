#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symramsey/pattern.hpp"
#include "symramsey/window.hpp"

namespace symramsey {

/// One configuration of a pattern inside a window.
struct SolutionTuple {
    /// Variable assignment in the pattern's declared variable order.
    std::vector<std::pair<std::string, std::int64_t>> assignment;
    /// Distinct integers the configuration occupies, ascending.
    std::vector<std::int64_t> occupied;
    /// Primary ordering key. For most families this is {occupied}; quad
    /// configurations order part by part (see enumerate_solutions).
    std::vector<std::vector<std::int64_t>> order_key;

    std::int64_t value(const std::string& var) const;
    std::vector<std::int64_t> values() const;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
};

/// Lexicographic on order_key, then on the assignment values.
bool solution_less(const SolutionTuple& a, const SolutionTuple& b);

/// Visitor returns false to stop early.
using SolutionVisitor = std::function<bool(const SolutionTuple&)>;

/// Unordered, complete enumeration of the configurations of `pattern` whose
/// variables and occupied integers lie in `window`. Arithmetic is 64-bit
/// checked; OverflowError names the offending values.
void for_each_solution(const PatternSpec& pattern, Window window, const SolutionVisitor& visit);

/// Solutions in increasing solution_less order, truncated to `limit`.
///
/// Glue equations eliminate the right-hand side by factoring l*v + k (v the
/// left-hand value) over divisors; values with l*v + k == 0 are skipped, as
/// are mean tuples with a + b odd.
///
/// Quad configurations order by (FS(x), x, FP(w), w, t+FS_{-t}(y), y,
/// t+sigma_{-t}(z), z) so that the least one decomposes part by part.
std::vector<SolutionTuple> enumerate_solutions(const PatternSpec& pattern, Window window,
                                               std::size_t limit = SIZE_MAX);

/// Re-checks a tuple by substituting its assignment into the defining
/// equations with arbitrary-precision arithmetic. Shares no code with the
/// enumerator. Returns an empty string when valid, else the failing condition.
std::string check_solution(const PatternSpec& pattern, Window window, const SolutionTuple& tuple);

inline bool validate_solution(const PatternSpec& pattern, Window window, const SolutionTuple& tuple) {
    return check_solution(pattern, window, tuple).empty();
}

namespace detail {
/// Signed divisors f of n (n != 0), ascending.
std::vector<std::int64_t> signed_divisors(std::int64_t n);
/// Quad part sets for one sequence: FS, FP, t+FS_{-t}, t+sigma_{-t}.
std::vector<std::int64_t> quad_part(int part, std::int64_t t, const std::vector<std::int64_t>& seq);
/// Union of sigma_t(x) u sigma_t(F (.)_t x) u sigma_t(F) for depth 1 or 2.
std::vector<std::int64_t> mixed_union(std::int64_t t, const std::vector<std::vector<std::int64_t>>& families,
                                      const std::vector<std::int64_t>& xs);
/// Distinct family configurations (by occupied set) avoiding t, least representative first.
std::vector<SolutionTuple> mixed_family_members(const PatternSpec& family, Window w, std::int64_t t);
/// Admissible x values: the window minus t and t+1.
std::vector<std::int64_t> mixed_x_domain(Window w, std::int64_t t);

struct QuadCandidate {
    std::vector<std::int64_t> set;
    std::vector<std::int64_t> seq;
};
/// Per part (x, w, y, z), every strictly increasing sequence in the window whose
/// part set lies in the window, sorted by (set, seq).
std::vector<std::vector<QuadCandidate>> quad_candidates(const QuadSequences& q, Window w);
} // namespace detail

} // namespace symramsey
