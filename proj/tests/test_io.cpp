#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "tcoi/graph.hpp"
#include "tcoi/graph_io.hpp"

using namespace tcoi;

TEST_CASE("edge list round trip") {
    Graph g(5, {{4, 0}, {1, 2}, {0, 3}});
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "5 3\n0 3\n0 4\n1 2\n");
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list reader accepts unordered endpoints, comments, blanks") {
    std::istringstream in("# corpus item\n4 2\n\n3 2\n0 1\n");
    Graph g = read_edge_list(in);
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("edge list parse errors carry line numbers") {
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_WITH_AS(read_edge_list(bad_header), doctest::Contains("line 1"),
                         invalid_input_error);
    std::istringstream bad_edge("2 1\n0 7\n");
    CHECK_THROWS_WITH_AS(read_edge_list(bad_edge), doctest::Contains("line 2"),
                         invalid_input_error);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), invalid_input_error);
}

// Reference strings generated independently with networkx.to_graph6_bytes.
TEST_CASE("graph6 writer matches reference encodings") {
    CHECK(write_graph6(make_complete(3)) == "Bw");
    CHECK(write_graph6(make_path(4)) == "Ch");
    CHECK(write_graph6(make_cycle(6)) == "EhEG");
    CHECK(write_graph6(make_star(4)) == "Ds_");
    CHECK(write_graph6(Graph(5)) == "D??");
    CHECK(write_graph6(make_complete(4)) == "C~");
    Graph k4_minus_e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(write_graph6(k4_minus_e) == "C}");
}

TEST_CASE("graph6 reader inverts the writer, header tolerated") {
    CHECK(read_graph6_line("Ch") == make_path(4));
    CHECK(read_graph6_line(">>graph6<<Bw") == make_complete(3));
    CHECK(read_graph6_line("EhEG\n") == make_cycle(6));
    CHECK_THROWS_AS(read_graph6_line(""), invalid_input_error);
    CHECK_THROWS_AS(read_graph6_line("C"), invalid_input_error);  // truncated bits
}

TEST_CASE("graph6 round trip including multi-byte orders") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng() % 80);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(read_graph6_line(write_graph6(g)) == g);
    }
}

TEST_CASE("file auto-detection") {
    {
        std::ofstream f("io_probe_edges.txt");
        f << "4 3\n0 1\n1 2\n2 3\n";
    }
    CHECK(read_graph_file("io_probe_edges.txt") == make_path(4));
    {
        std::ofstream f("io_probe.g6");
        f << "Ch\n";
    }
    CHECK(read_graph_file("io_probe.g6") == make_path(4));
    CHECK_THROWS_AS(read_graph_file("io_probe_missing.txt"), invalid_input_error);
}

TEST_CASE("dot export lists every vertex and edge") {
    std::string dot = write_dot(make_path(3));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
