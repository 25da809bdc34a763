#pragma once

#include "leftorder/germ_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leftorder {

/// A germ at (0, 0) of (x, s) -> (h_s(x), s) on R x S, S = {0} U {1/n}, given
/// by an expression for h_s(x) valid on |x| < rho.
struct ParamGerm {
    std::string name;
    Expr expression;
    Rational rho = 1;
};

ParamGerm make_germ(std::string name, std::string_view expression, const Rational& rho);
ParamGerm identity_germ(const Rational& rho = 1);

bool in_parameter_space(const Rational& s);

// h_s(x); DomainError if |x| >= rho, s is not in S, or the expression divides by zero.
Rational eval_param_germ(const ParamGerm& f, const Rational& x, const Rational& s);

// f o g by substitution; rho is the smaller of the two.
ParamGerm compose_param_germ(const ParamGerm& f, const ParamGerm& g);
// Throws UnsupportedInverse outside the piecewise-affine class.
ParamGerm invert_param_germ(const ParamGerm& f);

struct GridPoint {
    Rational x;
    Rational s;
    std::size_t shell = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Sample points of shell m >= 1, all with max(|x|, s) <= 2^-m: s runs over
/// 0 then 1/n for n = 2^m .. 2^(m+1) - 1; for each s, x runs over
/// 0, +-(k/8) 2^-m for k = 8 down to 1.
std::vector<GridPoint> shell_points(std::size_t m);

struct WitnessPoint {
    GridPoint point;
    Rational image;  // h_s(x) != x
};

// One moved grid point per shell 1..depth, chosen so |x| and s never grow when
// possible; nullopt if some shell has none.
std::optional<std::vector<WitnessPoint>> find_nontriviality_witness(const ParamGerm& f, std::size_t depth);

// Checks h_0(0) = 0 and strict monotonicity in x along every sampled s of
// shells 1..depth. Empty string when fine.
std::string check_germ(const ParamGerm& f, std::size_t depth);

}  // namespace leftorder
