#include "leftorder/germ.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>
#include <map>

namespace leftorder {

ParamGerm make_germ(std::string name, std::string_view expression, const Rational& rho) {
    if (rho <= 0) throw StructuralError("germ `" + name + "` needs a positive neighborhood radius");
    return ParamGerm{std::move(name), parse_expr(expression), rho};
}

ParamGerm identity_germ(const Rational& rho) { return ParamGerm{"id", expr::x(), rho}; }

bool in_parameter_space(const Rational& s) {
    return s == 0 || (s > 0 && s <= 1 && s.get_num() == 1);
}

Rational eval_param_germ(const ParamGerm& f, const Rational& x, const Rational& s) {
    if (!in_parameter_space(s)) throw DomainError("parameter " + to_string(s) + " is not in {0} U {1/n}");
    const Rational magnitude = x < 0 ? Rational(-x) : x;
    if (!(magnitude < f.rho)) {
        throw DomainError("x = " + to_string(x) + " outside the neighborhood of `" + f.name + "`");
    }
    return evaluate(f.expression, x, s);
}

ParamGerm compose_param_germ(const ParamGerm& f, const ParamGerm& g) {
    return ParamGerm{f.name + "*" + g.name, substitute_x(f.expression, g.expression), std::min(f.rho, g.rho)};
}

ParamGerm invert_param_germ(const ParamGerm& f) {
    return ParamGerm{f.name + "^-1", invert_in_x(f.expression), f.rho};
}

std::vector<GridPoint> shell_points(std::size_t m) {
    if (m == 0 || m > 24) throw PreconditionError("shell index must be in 1..24");
    const Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(m);
    std::vector<Rational> xs{Rational(0)};
    for (int k = 8; k >= 1; --k) {
        Rational q(Integer(k), Integer(8) * scale);
        q.canonicalize();
        xs.push_back(q);
        xs.push_back(-q);
    }
    std::vector<Rational> ss{Rational(0)};
    for (Integer n = scale; n < 2 * scale; ++n) ss.emplace_back(Integer(1), n);
    std::vector<GridPoint> out;
    out.reserve(xs.size() * ss.size());
    for (const Rational& s : ss) {
        for (const Rational& x : xs) out.push_back({x, s, m});
    }
    return out;
}

namespace {

bool dominated(const GridPoint& pt, const GridPoint& prev) { return abs(pt.x) <= abs(prev.x) && pt.s <= prev.s; }

struct ChainSearch {
    const ParamGerm& f;
    std::size_t depth;
    std::size_t budget = 200000;
    std::map<std::size_t, std::vector<GridPoint>> shells;
    std::vector<WitnessPoint> chain;

    const std::vector<GridPoint>& shell(std::size_t m) {
        auto it = shells.find(m);
        if (it == shells.end()) it = shells.emplace(m, shell_points(m)).first;
        return it->second;
    }

    std::optional<Rational> moved(const GridPoint& pt) {
        if (budget == 0) return std::nullopt;
        --budget;
        try {
            Rational y = eval_param_germ(f, pt.x, pt.s);
            if (y != pt.x) return y;
        } catch (const DomainError&) {
        }
        return std::nullopt;
    }

    // Extends the chain through shells m..depth, first candidates first.
    bool extend(std::size_t m) {
        if (m > depth) return true;
        for (const GridPoint& pt : shell(m)) {
            if (!chain.empty() && !dominated(pt, chain.back().point)) continue;
            auto y = moved(pt);
            if (!y) {
                if (budget == 0) return false;
                continue;
            }
            chain.push_back({pt, std::move(*y)});
            if (extend(m + 1)) return true;
            chain.pop_back();
            if (budget == 0) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<WitnessPoint>> find_nontriviality_witness(const ParamGerm& f, std::size_t depth) {
    if (depth == 0) throw PreconditionError("witness depth must be at least 1");
    // A chain with |x| and s shrinking shell to shell, when one turns up within budget.
    ChainSearch search{f, depth, 200000, {}, {}};
    if (search.extend(1)) return std::move(search.chain);

    std::vector<WitnessPoint> out;
    for (std::size_t m = 1; m <= depth; ++m) {
        std::optional<WitnessPoint> found;
        for (const GridPoint& pt : search.shell(m)) {
            try {
                Rational y = eval_param_germ(f, pt.x, pt.s);
                if (y != pt.x) {
                    found = WitnessPoint{pt, std::move(y)};
                    break;
                }
            } catch (const DomainError&) {
            }
        }
        if (!found) return std::nullopt;
        out.push_back(std::move(*found));
    }
    return out;
}

std::string check_germ(const ParamGerm& f, std::size_t depth) {
    try {
        if (evaluate(f.expression, Rational(0), Rational(0)) != 0) return "`" + f.name + "` does not fix (0, 0)";
    } catch (const DomainError& e) {
        return e.what();
    }
    for (std::size_t m = 1; m <= depth; ++m) {
        std::map<Rational, std::vector<Rational>> by_s;
        for (const GridPoint& pt : shell_points(m)) {
            if ((pt.x < 0 ? Rational(-pt.x) : pt.x) < f.rho) by_s[pt.s].push_back(pt.x);
        }
        for (auto& [s, xs] : by_s) {
            std::sort(xs.begin(), xs.end());
            std::optional<Rational> previous;
            for (const Rational& x : xs) {
                Rational y;
                try {
                    y = eval_param_germ(f, x, s);
                } catch (const DomainError& e) {
                    return e.what();
                }
                if (previous && !(*previous < y)) {
                    return "`" + f.name + "` is not increasing in x at s = " + to_string(s) + ", x = " + to_string(x);
                }
                previous = y;
            }
        }
    }
    return {};
}

}  // namespace leftorder
