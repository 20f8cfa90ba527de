#include "symramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "symramsey/error.hpp"
#include "symramsey/match.hpp"
#include "symramsey/solutions.hpp"

namespace symramsey {

using i64 = std::int64_t;

std::string to_string(Domain d) { return d == Domain::positive ? "positive" : "z"; }

Domain parse_domain(const std::string& s) {
    if (s == "positive")
        return Domain::positive;
    if (s == "z")
        return Domain::z;
    throw ValidationError("unknown domain '" + s + "' (expected positive or z)");
}

Window domain_window(Domain d, i64 n) {
    if (n < 1)
        throw ValidationError("N must be at least 1, got " + std::to_string(n));
    return d == Domain::positive ? Window::make(1, n) : Window::make(-n, n);
}

namespace detail {

std::vector<std::vector<i64>> domain_tuples(const PatternSpec& pattern, Domain d, i64 n, std::size_t max_entries) {
    return window_tuples(pattern, domain_window(d, n), d == Domain::z, max_entries);
}

std::vector<std::vector<i64>> window_tuples(const PatternSpec& pattern, Window w, bool drop_zero,
                                            std::size_t max_entries) {
    std::set<std::vector<i64>> seen;
    std::size_t entries = 0;
    for_each_solution(pattern, w, [&](const SolutionTuple& s) {
        if (drop_zero && std::binary_search(s.occupied.begin(), s.occupied.end(), 0))
            return true;
        if (seen.insert(s.occupied).second) {
            entries += s.occupied.size();
            if (entries > max_entries)
                throw ResourceError("configurations of " + pattern.name() + " on " + w.to_string() +
                                    " exceed the bound of " + std::to_string(max_entries) + " stored integers");
        }
        return true;
    });
    std::vector<std::vector<i64>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return out;
}

} // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class Backtracker {
  public:
    Backtracker(const std::vector<std::vector<i64>>& tuples, Window w, int r) : w_(w), r_(r), by_max_(w.size()) {
        for (const auto& t : tuples) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i + 1 < t.size(); ++i)
                rest.push_back(w.index(t[i]));
            by_max_[w.index(t.back())].push_back(std::move(rest));
        }
    }

    std::size_t size() const { return by_max_.size(); }
    int colors_at(std::size_t pos) const { return pos == 0 ? 1 : r_; }

    /// Color c at pos completes no monochromatic configuration.
    bool admissible(const std::vector<int>& colors, std::size_t pos, int c) const {
        for (const auto& rest : by_max_[pos]) {
            bool mono = true;
            for (std::size_t q : rest)
                if (colors[q] != c) {
                    mono = false;
                    break;
                }
            if (mono)
                return false;
        }
        return true;
    }

    struct Run {
        std::uint64_t nodes = 0;
        std::size_t max_depth = 0;
    };

    /// Depth-first completion of colors[pos..]; false when exhausted or cancelled.
    bool complete(std::vector<int>& colors, std::size_t pos, Run& run, const std::function<bool()>& cancelled) const {
        if (pos == size())
            return true;
        if ((run.nodes & 0x3ff) == 0 && cancelled())
            return false;
        for (int c = 0; c < colors_at(pos); ++c) {
            if (!admissible(colors, pos, c))
                continue;
            colors[pos] = c;
            ++run.nodes;
            run.max_depth = std::max(run.max_depth, pos + 1);
            if (complete(colors, pos + 1, run, cancelled))
                return true;
        }
        colors[pos] = -1;
        return false;
    }

    /// Every admissible assignment of the first `depth` positions, in
    /// lexicographic order. ranks[i] is the number of prefixes emitted before
    /// the i-th visited node, so a sequential search that stops inside prefix
    /// b visits exactly the nodes with rank <= b.
    void prefixes(std::size_t depth, std::vector<std::vector<int>>& out, std::vector<std::pair<std::size_t, std::size_t>>& ranks,
                  std::vector<int>& colors, std::size_t pos) const {
        if (pos == depth) {
            out.push_back(colors);
            return;
        }
        for (int c = 0; c < colors_at(pos); ++c) {
            if (!admissible(colors, pos, c))
                continue;
            colors[pos] = c;
            ranks.emplace_back(out.size(), pos + 1);
            prefixes(depth, out, ranks, colors, pos + 1);
        }
        colors[pos] = -1;
    }

    Window window() const { return w_; }

  private:
    Window w_;
    int r_;
    /// by_max_[p]: for each configuration whose largest element sits at p, the other positions
    std::vector<std::vector<std::vector<std::size_t>>> by_max_;
};

std::optional<std::vector<int>> search_serial(const Backtracker& bt, SearchStats& stats) {
    std::vector<int> colors(bt.size(), -1);
    Backtracker::Run run;
    const bool found = bt.complete(colors, 0, run, [] { return false; });
    stats.nodes = run.nodes;
    stats.max_depth = run.max_depth;
    if (!found)
        return std::nullopt;
    return colors;
}

std::optional<std::vector<int>> search_parallel(const Backtracker& bt, unsigned workers, int r, SearchStats& stats) {
    std::size_t depth = 1;
    for (std::size_t count = 1; depth < bt.size() && count < 8 * std::size_t{workers}; ++depth)
        count *= static_cast<std::size_t>(r);

    std::vector<std::vector<int>> prefixes;
    std::vector<std::pair<std::size_t, std::size_t>> ranks;
    std::vector<int> scratch(bt.size(), -1);
    bt.prefixes(depth, prefixes, ranks, scratch, 0);

    struct Slot {
        bool found = false;
        std::vector<int> colors;
        Backtracker::Run run;
    };
    std::vector<Slot> slots(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};

    auto work = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= prefixes.size())
                return;
            if (j > best.load())
                continue;
            Slot& s = slots[j];
            s.colors = prefixes[j];
            s.colors.resize(bt.size(), -1);
            s.found = bt.complete(s.colors, depth, s.run, [&] { return best.load() < j; });
            if (s.found) {
                std::size_t cur = best.load();
                while (j < cur && !best.compare_exchange_weak(cur, j)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();

    const std::size_t b = best.load();
    for (const auto& [rank, d] : ranks)
        if (rank <= b) {
            ++stats.nodes;
            stats.max_depth = std::max(stats.max_depth, d);
        }
    for (std::size_t j = 0; j < slots.size() && j <= b; ++j) {
        stats.nodes += slots[j].run.nodes;
        stats.max_depth = std::max(stats.max_depth, slots[j].run.max_depth);
    }
    if (b == SIZE_MAX)
        return std::nullopt;
    return slots[b].colors;
}

void check_search_args(int r, i64 n) {
    if (r < 1)
        throw ValidationError("need at least one color, got r=" + std::to_string(r));
    if (n < 1)
        throw ValidationError("N must be at least 1, got " + std::to_string(n));
}

} // namespace

SearchOutcome decide(const PatternSpec& pattern, int r, i64 n, const SearchOptions& options) {
    check_search_args(r, n);
    auto out = decide_window(pattern, r, domain_window(options.domain, n), options);
    out.n = n;
    return out;
}

SearchOutcome decide_window(const PatternSpec& pattern, int r, Window w, const SearchOptions& options) {
    check_search_args(r, 1);
    const auto t0 = Clock::now();
    SearchOutcome out;
    out.pattern = pattern.name();
    out.r = r;
    out.n = static_cast<i64>(w.size());
    out.domain = options.domain;
    const auto tuples =
        detail::window_tuples(pattern, w, options.domain == Domain::z, options.max_tuple_entries);
    out.stats.tuples = tuples.size();
    const Backtracker bt(tuples, w, r);
    const auto colors = options.workers <= 1 ? search_serial(bt, out.stats)
                                             : search_parallel(bt, options.workers, r, out.stats);
    if (colors) {
        out.avoidable = true;
        out.coloring = Coloring(w, r, *colors);
    }
    out.stats.elapsed_ms = ms_since(t0);
    return out;
}

bool verify_avoiding(const PatternSpec& pattern, const Coloring& c, Domain domain) {
    if (domain == Domain::positive)
        return !find_monochromatic(c, pattern).has_value();
    bool clean = true;
    for_each_solution(pattern, c.window(), [&](const SolutionTuple& s) {
        if (std::binary_search(s.occupied.begin(), s.occupied.end(), 0))
            return true;
        const int col = c.color_of(s.occupied.front());
        clean = !std::all_of(s.occupied.begin(), s.occupied.end(), [&](i64 v) { return c.color_of(v) == col; });
        return clean;
    });
    return clean;
}

SearchOutcome brute_force_decide(const PatternSpec& pattern, int r, i64 n, Domain domain) {
    check_search_args(r, n);
    const auto t0 = Clock::now();
    const Window w = domain_window(domain, n);
    const std::size_t free = w.size() - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) {
        total *= static_cast<std::uint64_t>(r);
        if (total > (std::uint64_t{1} << 24))
            throw ResourceError("brute force over " + std::to_string(r) + "^" + std::to_string(free) +
                                " colorings exceeds the 2^24 guard");
    }
    SearchOutcome out;
    out.pattern = pattern.name();
    out.r = r;
    out.n = n;
    out.domain = domain;
    std::vector<int> colors(w.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t pos = w.size() - 1; pos >= 1; --pos) {
            colors[pos] = static_cast<int>(rest % static_cast<std::uint64_t>(r));
            rest /= static_cast<std::uint64_t>(r);
        }
        ++out.stats.nodes;
        Coloring c(w, r, colors);
        if (verify_avoiding(pattern, c, domain)) {
            out.avoidable = true;
            out.coloring = std::move(c);
            break;
        }
    }
    out.stats.max_depth = w.size();
    out.stats.elapsed_ms = ms_since(t0);
    return out;
}

RadoResult rado_number(const PatternSpec& pattern, int r, i64 n_max, const SearchOptions& options) {
    if (n_max < 1)
        throw ValidationError("N_max must be at least 1, got " + std::to_string(n_max));
    RadoResult res;
    res.pattern = pattern.name();
    res.r = r;
    res.n_max = n_max;
    res.domain = options.domain;
    for (i64 n = 1; n <= n_max; ++n) {
        auto out = decide(pattern, r, n, options);
        res.avoidable_by_n.push_back(out.avoidable);
        if (!out.avoidable) {
            res.number = n;
            res.unavoidable_stats = out.stats;
            break;
        }
        res.certificate = std::move(out.coloring);
    }
    return res;
}

} // namespace symramsey
