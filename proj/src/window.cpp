#include "symramsey/window.hpp"

namespace symramsey {

Coloring::Coloring(Window window, int r, std::vector<int> colors)
    : window_(window), r_(r), table_(std::move(colors)) {
    if (r < 1)
        throw ValidationError("coloring needs at least one color");
    if (table_.size() != window_.size())
        throw ValidationError("coloring table size " + std::to_string(table_.size()) + " does not match window " +
                              window_.to_string());
    for (int c : table_)
        if (c < 0 || c >= r)
            throw ValidationError("color " + std::to_string(c) + " outside [0," + std::to_string(r) + ")");
}

Coloring Coloring::constant(Window window, int r, int color) {
    return Coloring(window, r, std::vector<int>(window.size(), color));
}

Coloring Coloring::from_classes(Window window, const std::vector<std::vector<std::int64_t>>& classes) {
    std::vector<int> table(window.size(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::int64_t v : classes[c]) {
            if (!window.contains(v))
                throw ValidationError(std::to_string(v) + " lies outside " + window.to_string());
            if (table[window.index(v)] != -1)
                throw ValidationError(std::to_string(v) + " appears in two color classes");
            table[window.index(v)] = static_cast<int>(c);
        }
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] == -1)
            throw ValidationError(std::to_string(window.lo + static_cast<std::int64_t>(i)) + " is uncolored");
    return Coloring(window, static_cast<int>(classes.size()), std::move(table));
}

int Coloring::color_of(std::int64_t v) const {
    if (!window_.contains(v))
        throw DomainError(std::to_string(v) + " lies outside the colored window " + window_.to_string());
    return table_[window_.index(v)];
}

std::vector<std::vector<std::int64_t>> Coloring::classes() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(r_));
    for (std::size_t i = 0; i < table_.size(); ++i)
        out[static_cast<std::size_t>(table_[i])].push_back(window_.lo + static_cast<std::int64_t>(i));
    return out;
}

} // namespace symramsey
