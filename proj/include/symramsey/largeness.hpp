#pragma once

// Finite-window proxies for thick, syndetic and piecewise syndetic sets in
// (Z,+), (N,.) and (Z,(*)_{l,k}). Every verdict is a claim about the window
// (additive) or the certified interior window (translate structures) only.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symramsey/algebra.hpp"
#include "symramsey/window.hpp"

namespace symramsey {

/// A subset of a window, stored as a membership table.
class FiniteSetWindow {
  public:
    FiniteSetWindow() = default;
    explicit FiniteSetWindow(Window w) : window_(w), member_(w.size(), 0) {}
    static FiniteSetWindow from_members(Window w, const std::set<std::int64_t>& members);
    /// Closed intervals [a, b]; each must lie in the window.
    static FiniteSetWindow from_runs(Window w, const std::vector<std::pair<std::int64_t, std::int64_t>>& runs);

    const Window& window() const { return window_; }
    bool contains(std::int64_t v) const { return window_.contains(v) && member_[window_.index(v)]; }
    void set(std::int64_t v, bool in = true);
    std::size_t count() const;
    std::set<std::int64_t> members() const;
    /// Maximal runs of members, ascending.
    std::vector<std::pair<std::int64_t, std::int64_t>> runs() const;

    FiniteSetWindow complement() const;
    /// A + c on the window shifted by c.
    FiniteSetWindow translated(std::int64_t c) const;

    friend bool operator==(const FiniteSetWindow&, const FiniteSetWindow&) = default;

  private:
    Window window_{};
    std::vector<char> member_;
};

struct LargenessParams {
    /// g: syndetic gap bound
    std::int64_t gap = 1;
    /// L: thickness run length
    std::int64_t run = 1;
    /// m: translates are indexed by f with phi(f) in [1, m]
    std::int64_t translate_bound = 1;

    void validate() const;
};

struct Verdict {
    bool holds = false;
    /// Additive thick/pws and translate pws: {start, length} of the run.
    /// Translate syndetic: the cover F. Translate thick: {x}.
    std::vector<std::int64_t> witness;
    /// A position where the property fails, when it does.
    std::optional<std::int64_t> counterexample;
    std::string note;
};

struct ApExperiment {
    std::size_t longest = 0;
    std::vector<std::int64_t> terms;
    /// longest >= 3
    bool passed = false;
};

struct LargenessReport {
    /// "additive", "multiplicative" or "star"
    std::string structure;
    Window window;
    /// Translate structures: points y whose translates f (*) y all stay in the window.
    std::optional<Window> interior;
    LargenessParams params;
    std::optional<StarParams> star;
    /// Translate structures: F = {f : phi(f) in [1, m]}.
    std::vector<std::int64_t> translates;
    Verdict thick;
    Verdict syndetic;
    Verdict pws;
    /// pws stands in for "central" in the transfer statements.
    std::string proxy = "pws";
    /// Star only: additive pws of the same set, reported not asserted.
    std::optional<bool> implied_additive_pws;
    /// Star only, when pws holds and the window has at least 2^12 points.
    std::optional<ApExperiment> ap_experiment;
};

/// thick: L consecutive members. syndetic: every length-g subinterval of the
/// window meets A. pws: some length-L subinterval in which every length-g
/// subinterval meets A.
LargenessReport analyze_additive(const FiniteSetWindow& A, const LargenessParams& p);

/// Translates f^{-1}A = {y : f y in A}, f in [1, m], over the interior
/// [lo, floor(hi/m)]. Throws ValidationError unless the window is positive.
LargenessReport analyze_multiplicative(const FiniteSetWindow& A, const LargenessParams& p);

/// Translates f^{-1}A = {y : f (*) y in A} with phi(f) = l f + k in [1, m].
/// The interior holds the y with phi(y) >= 1 whose translates stay in the
/// window. Requires l | (k - 1).
LargenessReport analyze_star(const FiniteSetWindow& A, const StarParams& sp, const LargenessParams& p);

struct PullbackComparison {
    /// (.)_t verdicts on A + t
    LargenessReport shifted;
    /// multiplicative verdicts on A
    LargenessReport multiplicative;
    bool additive_pws_a = false;
    bool additive_pws_shifted = false;
    /// Verdicts agree on the common interior and additive pws is translation invariant.
    bool agreement = false;
};

PullbackComparison pullback_compare(const FiniteSetWindow& A, AffineShift t, const LargenessParams& p);

} // namespace symramsey
