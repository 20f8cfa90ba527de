#pragma once

// Exact integer algebra of the (l,k)-symmetric operation
//
//     a (*) b = c   <=>   (l a + k)(l b + k) = l c + k
//
// together with the shifted ring (Z, (+)_t, (.)_t) and its translation
// isomorphism h_t(x) = x + t.
//
// Every operation is a template over the integer back-end (see int_arith.hpp).
// BigInt is the default; int64_t/Int128 are checked and throw OverflowError.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symramsey/error.hpp"
#include "symramsey/int_arith.hpp"

namespace symramsey {

/// Parameters (l, k) of the operation. Closed on Z iff l | k(k-1).
class StarParams {
  public:
    /// Throws ValidationError unless l != 0 and l | k(k-1).
    static StarParams make(std::int64_t l, std::int64_t k);

    std::int64_t l() const { return l_; }
    std::int64_t k() const { return k_; }

    /// l | (k-1): the operation has the neutral element (1-k)/l.
    bool has_identity() const { return (k_ - 1) % l_ == 0; }
    std::optional<std::int64_t> identity() const;

    /// The constant (k^2 - k)/l appearing in the closed form.
    std::int64_t offset() const { return offset_; }

    friend bool operator==(const StarParams&, const StarParams&) = default;

  private:
    StarParams(std::int64_t l, std::int64_t k, std::int64_t offset) : l_(l), k_(k), offset_(offset) {}
    std::int64_t l_;
    std::int64_t k_;
    std::int64_t offset_;
};

/// Shift t of the ring (Z, (+)_t, (.)_t).
struct AffineShift {
    std::int64_t t = 0;

    /// (.)_t is the (1, -t) operation.
    StarParams as_star() const { return StarParams::make(1, -t); }

    friend bool operator==(const AffineShift&, const AffineShift&) = default;
};

/// Univariate integer polynomial c_0 + c_1 d + ... + c_n d^n.
struct IntPolynomial {
    std::int64_t constant = 0;
    /// coeffs[i] multiplies d^(i+1)
    std::vector<std::int64_t> coeffs;

    bool zero_constant() const { return constant == 0; }
    unsigned degree() const;

    template <class Int = BigInt>
    Int eval(const Int& d) const {
        // Horner over the non-constant part
        Int acc{0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = arith::mul(arith::add(acc, Int{*it}), d);
        return arith::add(acc, Int{constant});
    }

    /// Parses e.g. "d^2", "2*d^3-d", "d+1", "3d". Throws ValidationError.
    static IntPolynomial parse(const std::string& text);
    /// Canonical text form, inverse of parse.
    std::string to_string() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
};

/// Finite sequence x_1..x_n used for FS/FP/sigma generation.
template <class Int = BigInt>
struct IndexedSequence {
    std::vector<Int> values;
    /// Require pairwise distinct entries (injective sequence).
    bool distinct = false;

    void validate() const {
        if (!distinct)
            return;
        std::vector<Int> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("sequence marked distinct has repeated entries");
    }
};

// ---------------------------------------------------------------------------
// (l,k) operation

template <class Int = BigInt>
Int star(const StarParams& p, const Int& a, const Int& b) {
    using namespace arith;
    const Int l{p.l()}, k{p.k()};
    // l a b + k (a + b) + (k^2 - k)/l
    return add(add(mul(mul(l, a), b), mul(k, add(a, b))), Int{p.offset()});
}

template <class Int = BigInt>
Int star_fold(const StarParams& p, std::span<const Int> xs) {
    if (xs.empty())
        throw DomainError("star_fold of an empty sequence");
    Int acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i)
        acc = star<Int>(p, acc, xs[i]);
    return acc;
}

/// e_j(x_1..x_n) for 1 <= j <= n. There is no e_0.
template <class Int = BigInt>
Int elem_sym(std::size_t j, std::span<const Int> xs) {
    if (j < 1 || j > xs.size())
        throw DomainError("elementary symmetric index out of range: j=" + std::to_string(j) +
                          ", n=" + std::to_string(xs.size()));
    // e[m] after processing a prefix; e[0] = 1 is internal bookkeeping only
    std::vector<Int> e(j + 1, Int{0});
    e[0] = Int{1};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::size_t top = std::min(j, i + 1);
        for (std::size_t m = top; m >= 1; --m)
            e[m] = arith::add(e[m], arith::mul(e[m - 1], xs[i]));
    }
    return e[j];
}

/// G_{l,k}(x_1..x_n) = sum_j l^(j-1) k^(n-j) e_j + (k^n - k)/l
template <class Int = BigInt>
Int gsym(const StarParams& p, std::span<const Int> xs) {
    using namespace arith;
    if (xs.empty())
        throw DomainError("gsym of an empty sequence");
    const auto n = static_cast<unsigned>(xs.size());
    const Int l{p.l()}, k{p.k()};
    Int total{0};
    for (unsigned j = 1; j <= n; ++j)
        total = add(total, mul(mul(arith::pow(l, j - 1), arith::pow(k, n - j)), elem_sym<Int>(j, xs)));
    return add(total, exact_div(sub(arith::pow(k, n), k), l));
}

// ---------------------------------------------------------------------------
// Shifted ring

template <class Int = BigInt>
Int oplus(AffineShift s, const Int& a, const Int& b) {
    return arith::sub(arith::add(a, b), Int{s.t});
}

template <class Int = BigInt>
Int oplus_identity(AffineShift s) {
    return Int{s.t};
}

template <class Int = BigInt>
Int oplus_inverse(AffineShift s, const Int& a) {
    return arith::sub(arith::mul(Int{2}, Int{s.t}), a);
}

/// a (.)_t b = (a - t)(b - t) + t
template <class Int = BigInt>
Int odot(AffineShift s, const Int& a, const Int& b) {
    const Int t{s.t};
    return arith::add(arith::mul(arith::sub(a, t), arith::sub(b, t)), t);
}

enum class Direction { forward, inverse };

/// h_t(x) = x + t, a ring isomorphism (Z,+,*) -> (Z,(+)_t,(.)_t).
template <class Int = BigInt>
Int h_iso(AffineShift s, const Int& x, Direction dir = Direction::forward) {
    return dir == Direction::forward ? arith::add(x, Int{s.t}) : arith::sub(x, Int{s.t});
}

// ---------------------------------------------------------------------------
// Symmetry falsifier

struct SymmetryCheck {
    bool symmetric = true;
    std::uint64_t seed = 0;
    std::size_t tuples_tested = 0;
    std::size_t permutations_per_tuple = 0;
    /// First failing tuple and the permutation of it that changed the value.
    std::vector<BigInt> counterexample;
    std::vector<BigInt> permuted;

    explicit operator bool() const { return symmetric; }
};

using Evaluator = std::function<BigInt(std::span<const BigInt>)>;

/// Sampling-based check that `eval` is invariant under permutations of its
/// arguments. Falsifies, never proves: a true result only means no sampled
/// tuple/permutation pair broke symmetry. All permutations are tried for
/// arity <= 5, otherwise 120 seeded shuffles per tuple.
SymmetryCheck check_symmetric(std::size_t arity, const Evaluator& eval, std::size_t samples,
                              std::int64_t bound, std::uint64_t seed = 0x5eed);

// ---------------------------------------------------------------------------
// Finite sums / products over increasing index subsets

namespace detail {

/// Calls fn(indices) for every strictly increasing index subset of size 1..depth.
template <class Fn>
void for_each_index_subset(std::size_t n, std::size_t depth, Fn&& fn) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            fn(std::span<const std::size_t>(idx));
            if (idx.size() < depth)
                rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
}

inline void check_depth(std::size_t n, std::size_t depth) {
    if (n == 0)
        throw DomainError("sequence must be nonempty");
    if (depth < 1 || depth > n)
        throw DomainError("depth must lie in [1, length]");
}

} // namespace detail

/// { x_{i1} (.)_t x_{i2} (.)_t ... : i1 < i2 < ..., 1 <= count <= depth }
template <class Int = BigInt>
std::set<Int> sigma_set(AffineShift s, const IndexedSequence<Int>& xs, std::size_t depth) {
    xs.validate();
    detail::check_depth(xs.values.size(), depth);
    std::set<Int> out;
    detail::for_each_index_subset(xs.values.size(), depth, [&](std::span<const std::size_t> idx) {
        Int acc = xs.values[idx[0]];
        for (std::size_t m = 1; m < idx.size(); ++m)
            acc = odot<Int>(s, acc, xs.values[idx[m]]);
        out.insert(std::move(acc));
    });
    return out;
}

/// Classical finite products: sigma_set with t = 0.
template <class Int = BigInt>
std::set<Int> fp_set(const IndexedSequence<Int>& xs, std::size_t depth) {
    return sigma_set<Int>(AffineShift{0}, xs, depth);
}

/// { sum_{i in a} x_i - (|a| - 1) s }: finite sums in (Z, (+)_s).
template <class Int = BigInt>
std::set<Int> fs_set(AffineShift s, const IndexedSequence<Int>& xs, std::size_t depth) {
    xs.validate();
    detail::check_depth(xs.values.size(), depth);
    std::set<Int> out;
    detail::for_each_index_subset(xs.values.size(), depth, [&](std::span<const std::size_t> idx) {
        Int acc = xs.values[idx[0]];
        for (std::size_t m = 1; m < idx.size(); ++m)
            acc = oplus<Int>(s, acc, xs.values[idx[m]]);
        out.insert(std::move(acc));
    });
    return out;
}

} // namespace symramsey
