#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcoi/graph.hpp"

namespace tcoi {

// Exact fraction for bound thresholds; den > 0, normalized.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational whole(long long n) { return Rational(n, 1); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

bool rational_less(const Rational& a, const Rational& b);
bool rational_leq(const Rational& a, const Rational& b);
std::string rational_str(const Rational& r);

enum class Relation { eq, ge, le };

struct BoundEntry {
    std::string name;
    Relation relation = Relation::ge;
    long long lhs = 0;  // the parameter value under scrutiny
    Rational rhs;
    bool holds = false;
    bool tight = false;  // equality as rationals
    std::string note;
};

struct BoundsReport {
    int n = 0, m = 0;
    int min_degree = 0, max_degree = 0;
    bool connected = false;
    bool star = false;
    int gamma_t_value = 0, gamma_tcoi_value = 0, alpha_value = 0, beta_value = 0;
    std::vector<BoundEntry> entries;
    bool all_hold = true;
};

BoundEntry make_entry(std::string name, Relation rel, long long lhs, Rational rhs,
                      std::string note = "");

// Evaluates every inequality applicable to the instance against exactly
// solved parameter values. Star inputs get the 2*alpha identity in place of
// the cover sandwich.
BoundsReport evaluate_bounds(const Graph& g);

}  // namespace tcoi
