#include "tcoi/bounds.hpp"

#include <numeric>

#include "tcoi/solvers.hpp"

namespace tcoi {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw invalid_input_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool rational_less(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

bool rational_leq(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }

std::string rational_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

BoundEntry make_entry(std::string name, Relation rel, long long lhs, Rational rhs,
                      std::string note) {
    BoundEntry e;
    e.name = std::move(name);
    e.relation = rel;
    e.lhs = lhs;
    e.rhs = rhs;
    e.note = std::move(note);
    Rational l = Rational::whole(lhs);
    switch (rel) {
        case Relation::eq: e.holds = l == rhs; break;
        case Relation::ge: e.holds = rational_leq(rhs, l); break;
        case Relation::le: e.holds = rational_leq(l, rhs); break;
    }
    e.tight = l == rhs;
    return e;
}

BoundsReport evaluate_bounds(const Graph& g) {
    BoundsReport r;
    r.n = g.order();
    r.m = g.size();
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.connected = is_connected(g);
    r.star = is_star(g);

    SolveResult gt = gamma_t(g);
    SolveResult gc = gamma_tcoi(g);
    SolveResult a = alpha(g);
    SolveResult b = beta(g);
    r.gamma_t_value = gt.value;
    r.gamma_tcoi_value = gc.value;
    r.alpha_value = a.value;
    r.beta_value = b.value;

    long long n = r.n, m = r.m, dmin = r.min_degree, dmax = r.max_degree;
    long long gtc = gc.value;

    auto push = [&](BoundEntry e) {
        r.all_hold = r.all_hold && e.holds;
        r.entries.push_back(std::move(e));
    };

    push(make_entry("trivial_lower", Relation::ge, gtc, Rational::whole(2)));
    push(make_entry("trivial_upper", Relation::le, gtc, Rational::whole(n - 1)));
    push(make_entry("gallai", Relation::eq, a.value + b.value, Rational::whole(n)));
    push(make_entry("complement_independence_lower", Relation::ge, gtc,
                    Rational::whole(n - b.value)));
    push(make_entry("total_domination_lower", Relation::ge, gtc, Rational::whole(gt.value)));
    if (r.star) {
        push(make_entry("star_doubled_cover", Relation::eq, gtc, Rational::whole(2 * a.value),
                        "cover sandwich replaced by the star identity"));
    } else if (r.connected) {
        push(make_entry("cover_lower", Relation::ge, gtc, Rational::whole(a.value)));
        push(make_entry("cover_upper", Relation::le, gtc,
                        Rational::whole(2 * a.value - 1)));
    }
    push(make_entry("degree_ratio_lower", Relation::ge, gtc,
                    Rational(n * dmin, dmax + dmin - 1)));
    push(make_entry("size_degree_lower", Relation::ge, gtc,
                    Rational(2 * m + n * dmin, 3 * dmax + dmin - 2)));
    return r;
}

}  // namespace tcoi
