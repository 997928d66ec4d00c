#include <random>

#include "doctest.h"
#include "support/corpus.hpp"
#include "tcoi/bounds.hpp"
#include "tcoi/graph.hpp"
#include "tcoi/solvers.hpp"

using namespace tcoi;

namespace {

const BoundEntry* find(const BoundsReport& r, const std::string& name) {
    for (const auto& e : r.entries)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    Rational r(22, 11);
    CHECK(r.num == 2);
    CHECK(r.den == 1);
    Rational s(-4, -6);
    CHECK(s.num == 2);
    CHECK(s.den == 3);
    CHECK(rational_less(Rational(1, 3), Rational(1, 2)));
    CHECK(rational_leq(Rational(2, 4), Rational(1, 2)));
    CHECK(!rational_less(Rational(7, 2), Rational(10, 3)));
    CHECK(rational_str(Rational(7, 2)) == "7/2");
    CHECK(rational_str(Rational::whole(3)) == "3");
    CHECK_THROWS_AS(Rational(1, 0), invalid_input_error);
}

TEST_CASE("double stars make both degree bounds tight") {
    for (int k = 1; k <= 5; ++k) {
        Graph g = make_double_star(k, k);
        BoundsReport r = evaluate_bounds(g);
        CHECK(r.gamma_tcoi_value == 2);
        const BoundEntry* p11 = find(r, "degree_ratio_lower");
        REQUIRE(p11 != nullptr);
        CHECK(p11->holds);
        CHECK(p11->tight);
        CHECK(p11->rhs == Rational::whole(2));
        const BoundEntry* p12 = find(r, "size_degree_lower");
        REQUIRE(p12 != nullptr);
        CHECK(p12->holds);
        CHECK(p12->tight);
        CHECK(p12->rhs == Rational::whole(2));
    }
    // spot check the S_{3,3} arithmetic quoted with n=8, m=7, delta=1, Delta=4
    BoundsReport r = evaluate_bounds(make_double_star(3, 3));
    CHECK(find(r, "degree_ratio_lower")->rhs == Rational(8 * 1, 4 + 1 - 1));
    CHECK(find(r, "size_degree_lower")->rhs == Rational(2 * 7 + 8 * 1, 3 * 4 + 1 - 2));
}

TEST_CASE("stars route to the doubled-cover identity") {
    BoundsReport r = evaluate_bounds(make_star(5));
    CHECK(r.star);
    CHECK(find(r, "star_doubled_cover") != nullptr);
    CHECK(find(r, "star_doubled_cover")->holds);
    CHECK(find(r, "cover_upper") == nullptr);
    CHECK(r.all_hold);
}

TEST_CASE("C4 has a tight cover upper bound") {
    BoundsReport r = evaluate_bounds(make_cycle(4));
    CHECK(r.all_hold);
    const BoundEntry* upper = find(r, "cover_upper");
    REQUIRE(upper != nullptr);
    CHECK(upper->tight);  // 3 == 2*2 - 1
    CHECK(r.gamma_tcoi_value == 3);
}

TEST_CASE("all bounds hold across a random connected corpus") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = corpus::random_connected(rng, 3 + static_cast<int>(rng() % 7));
        BoundsReport r = evaluate_bounds(g);
        CHECK(r.all_hold);
        for (const auto& e : r.entries) CHECK(e.holds);
    }
}

TEST_CASE("bounds also hold on feasible disconnected instances") {
    std::mt19937 rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = corpus::random_disconnected_mix(rng);
        BoundsReport r = evaluate_bounds(g);
        for (const auto& e : r.entries) CHECK(e.holds);
    }
}

TEST_CASE("bounds propagate infeasibility errors") {
    CHECK_THROWS_AS(evaluate_bounds(make_path(2)), infeasible_error);
    CHECK_THROWS_AS(evaluate_bounds(Graph(3, {{0, 1}})), precondition_error);
}
