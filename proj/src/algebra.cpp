#include "symramsey/algebra.hpp"

#include <cctype>
#include <numeric>
#include <random>

namespace symramsey {

std::string to_string(Int128 v) {
    if (v == 0)
        return "0";
    const bool neg = v < 0;
    std::string digits;
    // work with negative values so INT128_MIN is representable
    Int128 x = neg ? v : -v;
    while (x != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg)
        digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

StarParams StarParams::make(std::int64_t l, std::int64_t k) {
    if (l == 0)
        throw ValidationError("star parameter l must be nonzero");
    std::int64_t kk;
    try {
        kk = arith::sub(arith::mul(k, k), k);
    } catch (const OverflowError&) {
        throw ValidationError("star parameter k=" + std::to_string(k) + " is too large");
    }
    if (kk % l != 0)
        throw ValidationError("star parameters (l=" + std::to_string(l) + ", k=" + std::to_string(k) +
                              ") are not closed on Z: l must divide k(k-1)");
    return StarParams(l, k, kk / l);
}

std::optional<std::int64_t> StarParams::identity() const {
    if (!has_identity())
        return std::nullopt;
    return (1 - k_) / l_;
}

// ---------------------------------------------------------------------------

unsigned IntPolynomial::degree() const {
    for (std::size_t i = coeffs.size(); i > 0; --i)
        if (coeffs[i - 1] != 0)
            return static_cast<unsigned>(i);
    return 0;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.constant != b.constant || a.degree() != b.degree())
        return false;
    for (unsigned i = 0; i < a.degree(); ++i)
        if (a.coeffs[i] != b.coeffs[i])
            return false;
    return true;
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ValidationError("empty polynomial");

    IntPolynomial poly;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ValidationError("bad polynomial '" + text + "': " + why);
    };
    auto read_uint = [&](std::int64_t& out) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            return false;
        try {
            out = std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
        return true;
    };

    bool first = true;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;

        std::int64_t coef = 1;
        const bool has_coef = read_uint(coef);
        if (has_coef && pos < s.size() && s[pos] == '*')
            ++pos;
        std::int64_t exp = 0;
        if (pos < s.size() && s[pos] == 'd') {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (!read_uint(exp) || exp < 1)
                    fail("exponent must be a positive integer");
                if (exp > 64)
                    fail("exponent too large");
            }
        } else if (!has_coef) {
            fail("expected a term at position " + std::to_string(pos));
        } else if (pos > 0 && s[pos - 1] == '*') {
            fail("dangling '*'");
        }

        const std::int64_t term = sign * coef;
        if (exp == 0) {
            poly.constant = arith::add(poly.constant, term);
        } else {
            if (poly.coeffs.size() < static_cast<std::size_t>(exp))
                poly.coeffs.resize(static_cast<std::size_t>(exp), 0);
            poly.coeffs[exp - 1] = arith::add(poly.coeffs[exp - 1], term);
        }
    }
    poly.coeffs.resize(poly.degree());
    return poly;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (unsigned e = degree(); e >= 1; --e) {
        const std::int64_t c = coeffs[e - 1];
        if (c == 0)
            continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1)
            out += std::to_string(mag) + "*";
        out += "d";
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    if (constant != 0 || out.empty()) {
        if (constant < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += std::to_string(constant < 0 ? -constant : constant);
    }
    return out;
}

// ---------------------------------------------------------------------------

SymmetryCheck check_symmetric(std::size_t arity, const Evaluator& eval, std::size_t samples,
                              std::int64_t bound, std::uint64_t seed) {
    if (arity < 1)
        throw DomainError("arity must be at least 1");
    if (samples < 1)
        throw DomainError("samples must be at least 1");
    if (bound < 0)
        throw DomainError("bound must be nonnegative");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> value(-bound, bound);

    // Permutations are fixed up front so every tuple sees the same set.
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> base(arity);
    std::iota(base.begin(), base.end(), std::size_t{0});
    if (arity <= 5) {
        auto p = base;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    } else {
        for (int i = 0; i < 120; ++i) {
            auto p = base;
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(std::move(p));
        }
    }

    SymmetryCheck result;
    result.seed = seed;
    result.permutations_per_tuple = perms.size();

    std::vector<BigInt> tuple(arity), permuted(arity);
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& v : tuple)
            v = value(rng);
        const BigInt reference = eval(tuple);
        ++result.tuples_tested;
        for (const auto& p : perms) {
            for (std::size_t i = 0; i < arity; ++i)
                permuted[i] = tuple[p[i]];
            if (eval(permuted) != reference) {
                result.symmetric = false;
                result.counterexample = tuple;
                result.permuted = permuted;
                return result;
            }
        }
    }
    return result;
}

} // namespace symramsey
