#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symramsey/error.hpp"

namespace symramsey {

/// Closed integer interval [lo, hi].
struct Window {
    std::int64_t lo = 1;
    std::int64_t hi = 1;

    static Window make(std::int64_t lo, std::int64_t hi) {
        if (lo > hi)
            throw ValidationError("window [" + std::to_string(lo) + "," + std::to_string(hi) + "] is empty");
        if (hi - lo > (std::int64_t{1} << 32))
            throw ValidationError("window too wide");
        return Window{lo, hi};
    }
    /// [1, n]
    static Window positive(std::int64_t n) { return make(1, n); }

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    std::size_t index(std::int64_t v) const { return static_cast<std::size_t>(v - lo); }

    std::string to_string() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

    friend bool operator==(const Window&, const Window&) = default;
};

/// An r-coloring of every integer in a window.
class Coloring {
  public:
    Coloring() = default;
    /// Throws ValidationError unless colors has one entry per window element, each in [0, r).
    Coloring(Window window, int r, std::vector<int> colors);

    /// Every element gets `color`.
    static Coloring constant(Window window, int r, int color = 0);
    /// Color classes given explicitly, e.g. {{1,4},{2,3}}; every window element must appear once.
    static Coloring from_classes(Window window, const std::vector<std::vector<std::int64_t>>& classes);

    const Window& window() const { return window_; }
    int colors() const { return r_; }
    int color_of(std::int64_t v) const;
    const std::vector<int>& table() const { return table_; }

    /// Members of each color class in increasing order.
    std::vector<std::vector<std::int64_t>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

  private:
    Window window_{};
    int r_ = 1;
    std::vector<int> table_;
};

} // namespace symramsey
