#pragma once

// Catalog of monochromatic configuration families and equations.
//
// Canonical names (grammar version 1):
//
//   ap:<L>                               {a, a+d, ..., a+(L-1)d}, d >= 1
//   poly:<P1>,<P2>,...                   {a} u {a + P(d)}, d >= 1, P(0) = 0
//   schur:add | schur:mul | schur:star:<l>,<k>   [:distinct]   {x, y, x o y}
//   moreira                              {x, x+y, xy}
//   blm                                  {x, x+y+xy, xy}
//   sigma:t=<t>:d=<d>                    all (.)_t products of x_1 < ... < x_d
//   glue:poly=<P>:star=<l>,<k>[:n=<n>][:allow-equal]
//                                        x + P(y-x) = z_1 (*) ... (*) z_n, x != y
//   glue:mean:star=<l>,<k>[:n=<n>][:distinct]
//                                        (a+b)/2 = c_1 (*) ... (*) c_n
//   glue:system=<P1>,...,<Pm>:star=<l>,<k>[:n=<n>][:allow-equal]
//                                        x_i - P_i(y-x) = y_1 (*) ... (*) y_n, i = 1..m
//   mixed:t=<t>:d=<d>:<family name>      sigma_t(x) u sigma_t(F (.)_t x) u sigma_t(F)
//   quad:t=<t>:d=<d>                     FS(x) u FP(w) u (t + FS_{-t}(y)) u (t + sigma_{-t}(z))

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "symramsey/algebra.hpp"

namespace symramsey {

inline constexpr int kPatternGrammarVersion = 1;

struct Ap {
    unsigned length = 3;
};

struct PolyVdw {
    std::vector<IntPolynomial> polys;
};

enum class SchurOp { add, mul, star };

struct SchurTriple {
    SchurOp op = SchurOp::add;
    /// Used when op == star.
    std::optional<StarParams> star;
    /// x == y admitted (classical convention).
    bool allow_equal = true;
};

struct MoreiraTriple {};
struct BlmTriple {};

struct SigmaConfig {
    AffineShift t;
    unsigned depth = 2;
};

struct GlueEquation {
    enum class Lhs { poly, mean, system };
    Lhs lhs = Lhs::poly;
    /// One polynomial for poly, m for system, none for mean.
    std::vector<IntPolynomial> polys;
    StarParams star = StarParams::make(1, 1);
    /// Number of variables folded on the right-hand side.
    unsigned arity = 2;
    /// x != y (a != b for mean).
    bool distinct = true;
};

struct PatternSpec;

struct MixedConfig {
    std::shared_ptr<const PatternSpec> family;
    AffineShift t;
    unsigned depth = 1;
};

struct QuadSequences {
    AffineShift t;
    unsigned depth = 1;
};

struct PatternSpec {
    using Kind = std::variant<Ap, PolyVdw, SchurTriple, MoreiraTriple, BlmTriple, SigmaConfig, GlueEquation,
                              MixedConfig, QuadSequences>;
    Kind kind;

    /// Parse a canonical (or equivalent) name. Throws ValidationError.
    static PatternSpec parse(const std::string& name);
    /// Canonical name; parse(p.name()).name() == p.name().
    std::string name() const;
    /// Throws ValidationError when the structural invariants fail.
    void validate() const;

    /// Families whose configurations are single solution tuples (everything but mixed/quad).
    bool is_tuple_family() const;

    template <class T>
    bool is() const {
        return std::holds_alternative<T>(kind);
    }
    template <class T>
    const T& as() const {
        return std::get<T>(kind);
    }
};

bool operator==(const PatternSpec& a, const PatternSpec& b);

} // namespace symramsey
