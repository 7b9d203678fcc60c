#include <catch2/catch_amalgamated.hpp>

#include "xormagic/construct.hpp"
#include "xormagic/degrees.hpp"

using namespace xormagic;

namespace {

std::set<int> odd_range(int lo, int hi) {
    std::set<int> s;
    for (int d = lo; d <= hi; d += 2)
        s.insert(d);
    return s;
}

std::set<int> even_range(int lo, int hi) {
    std::set<int> s;
    for (int d = lo; d <= hi; d += 2)
        s.insert(d);
    return s;
}

} // namespace

TEST_CASE("power-8 open degrees under cartesian products alone") {
    const auto reach = reachable_degrees(8, Parity::open_odd, {.cartesian = true});
    CHECK(reach.degrees == odd_range(9, 21));
}

TEST_CASE("power-8 closed degrees under cartesian and strong products") {
    const auto reach = reachable_degrees(8, Parity::closed_even, {.cartesian = true, .strong = true});
    std::set<int> expected = even_range(8, 24);
    for (int d : {34, 44, 48, 54, 62, 76, 80, 98, 120})
        expected.insert(d);
    CHECK(reach.degrees == expected);
}

TEST_CASE("power-8 open degrees under all rules add the complement band") {
    const auto reach =
        reachable_degrees(8, Parity::open_odd, {.cartesian = true, .strong = true, .complement = true});
    std::set<int> expected = odd_range(9, 21);
    for (int d : {135, 157, 175, 179, 193, 201, 207, 211, 221})
        expected.insert(d);
    for (int d = 231; d <= 247; d += 2)
        expected.insert(d);
    CHECK(reach.degrees == expected);
}

TEST_CASE("power-8 closed degrees under all rules") {
    const auto reach =
        reachable_degrees(8, Parity::closed_even, {.cartesian = true, .strong = true, .complement = true});
    std::set<int> expected = even_range(8, 24);
    for (int d : {34, 44, 48, 54, 62, 76, 80, 98, 120})
        expected.insert(d);
    for (int d = 234; d <= 246; d += 2)
        expected.insert(d); // complements of the 9..21 open band
    CHECK(reach.degrees == expected);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(reachable_degrees(3, Parity::open_odd, {.cartesian = true}), std::invalid_argument);
    CHECK_THROWS_AS(reachable_degrees(8, Parity::open_odd, {}), std::invalid_argument);
}

TEST_CASE("traces are recorded and realizable") {
    const auto reach = reachable_degrees(8, Parity::open_odd, {.cartesian = true});
    const std::string trace = format_trace(reach.table, {8, Parity::open_odd, 9});
    CHECK(trace.find("cartesian") != std::string::npos);
    CHECK(trace.find("4:5") != std::string::npos);
    CHECK(trace.find("4:4") != std::string::npos);

    const LabeledGraph g9 = realize_fact(reach.table, {8, Parity::open_odd, 9});
    CHECK(g9.graph.order() == 256);
    CHECK(g9.graph.regularity() == 9);
    CHECK(verify_open_xor_magic(g9.graph, g9.labeling).ok());

    const auto closed = reachable_degrees(8, Parity::closed_even, {.cartesian = true, .strong = true});
    const LabeledGraph g24 = realize_fact(closed.table, {8, Parity::closed_even, 24});
    CHECK(g24.graph.regularity() == 24);
    CHECK(verify_closed_xor_magic(g24.graph, g24.labeling).ok());

    CHECK_THROWS_AS(format_trace(reach.table, {8, Parity::open_odd, 8}), std::invalid_argument);
}

TEST_CASE("closure composes through intermediate powers") {
    const auto reach = reachable_degrees(12, Parity::open_odd, {.cartesian = true});
    CHECK(!reach.degrees.empty());
    CHECK(reach.degrees.count(13) == 1); // e.g. power-8 open 9 with power-4 closed 4
    for (int deg : reach.degrees)
        CHECK(deg % 2 == 1);
    const auto closed = reachable_degrees(12, Parity::closed_even, {.cartesian = true});
    for (int deg : closed.degrees)
        CHECK(deg % 2 == 0);
}

TEST_CASE("every derivation leaf is a recorded base fact") {
    const auto reach =
        reachable_degrees(9, Parity::closed_even, {.cartesian = true, .strong = true, .complement = true});
    const FactTable base = default_degree_facts();
    for (const auto& [key, der] : reach.table) {
        if (der.rule == Derivation::Rule::base)
            CHECK(base.count(key) == 1);
        if (der.left)
            CHECK(reach.table.count(*der.left) == 1);
        if (der.right)
            CHECK(reach.table.count(*der.right) == 1);
    }
}
