#pragma once

// DIMACS CNF export of avoidability questions and checking of external models.
//
// Variable of (integer i, color c) is (i - lo) * r + c + 1. Clauses, in order:
// for each integer an at-least-one clause followed by its r(r-1)/2 at-most-one
// clauses; then for each configuration (by largest element) and each color c
// the clause OR_{i in T} -x_{i,c}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symramsey/search.hpp"

namespace symramsey {

struct CnfDocument {
    std::string pattern;
    std::int64_t n = 0;
    int r = 1;
    Domain domain = Domain::positive;
    std::int64_t num_vars = 0;
    std::vector<std::vector<std::int64_t>> clauses;

    Window window() const { return domain_window(domain, n); }
    std::int64_t var(std::int64_t i, int c) const { return (i - window().lo) * r + c + 1; }

    std::string to_dimacs() const;
    /// Reads a document written by to_dimacs; the metadata comment is required.
    static CnfDocument parse(const std::string& text);
};

CnfDocument export_cnf(const PatternSpec& pattern, int r, std::int64_t n, const SearchOptions& options = {});

struct ModelCheck {
    bool accepted = false;
    std::optional<Coloring> coloring;
    /// Index of the first violated clause.
    std::optional<std::size_t> violated_clause;
    std::string reason;
};

/// Literals of a `v`-line model (the terminating 0 is optional). Throws
/// ValidationError unless every variable appears exactly once.
ModelCheck validate_model(const CnfDocument& doc, const std::vector<std::int64_t>& literals);

/// Literals from DIMACS solver output: `v` lines, or bare integer lines;
/// `c` and `s` lines are skipped.
std::vector<std::int64_t> parse_model(const std::string& text);

} // namespace symramsey
