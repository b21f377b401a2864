#include "ksrd/graph.hpp"

#include <vector>

#include "doctest.h"
#include "ksrd/errors.hpp"
#include "ksrd/family.hpp"

using namespace ksrd;

TEST_CASE("polytope D_n is cubic with the advertised size") {
  Graph g = make_family({Family::polytope_D, {5}});
  CHECK(g.vertex_count() == 20);
  CHECK(g.edge_count() == 30);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
  CHECK(is_cubic(g));
  CHECK(is_cubic(make_family({Family::polytope_D, {7}})));
}

TEST_CASE("polytope R''_n is cubic with nine edge orbits") {
  Graph g = make_family({Family::polytope_Rpp, {5}});
  CHECK(g.vertex_count() == 30);
  CHECK(g.edge_count() == 45);
  CHECK(is_cubic(g));
}

TEST_CASE("polytope A_n is not cubic") {
  Graph g = make_family({Family::polytope_A, {6}});
  CHECK(g.vertex_count() == 18);
  CHECK(g.edge_count() == 42);
  CHECK_FALSE(is_cubic(g));
  // inner ring degree 4, middle ring degree 6, outer ring degree 4
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(6) == 6);
  CHECK(g.degree(12) == 4);
}

TEST_CASE("paths and degenerate families") {
  CHECK_FALSE(is_cubic(make_family({Family::path, {4}})));
  Graph k1 = make_family({Family::complete, {1}});
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("wheel has a hub of degree n-1 and a closed rim") {
  Graph w = make_family({Family::wheel, {6}});
  CHECK(w.degree(0) == 5);
  for (int v = 1; v < 6; ++v) CHECK(w.degree(v) == 3);
  CHECK(w.has_edge(1, 5));
}

TEST_CASE("grid2 matches the generic grid generator") {
  CHECK(make_family({Family::grid2, {7}}) == make_family({Family::grid, {2, 7}}));
}

TEST_CASE("family names follow the block layout") {
  Graph d = make_family({Family::polytope_D, {5}});
  CHECK(d.names()[0] == "a_0");
  CHECK(d.names()[5] == "b_0");
  CHECK(d.names()[13] == "c_3");
  Graph p = make_family({Family::path, {3}});
  CHECK(p.names() == std::vector<std::string>{"a_1", "a_2", "a_3"});
  Graph kb = make_family({Family::complete_bipartite, {3, 2}});
  CHECK(kb.names()[0] == "u_1");
  CHECK(kb.names()[3] == "v_1");
}

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("3 2\n0 1\n1 2");
  CHECK(g == make_family({Family::path, {3}}));
}

TEST_CASE("write_graph emits sorted endpoints in stored order") {
  CHECK(write_graph(make_family({Family::cycle, {3}})) == "3 3\n0 1\n1 2\n0 2\n");
}

TEST_CASE("parse_graph rejects bad input") {
  CHECK_THROWS_AS(parse_graph("2 1\n0 0"), format_error);        // self-loop
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0"), format_error);   // duplicate
  CHECK_THROWS_AS(parse_graph("2 1\n0 5"), format_error);        // out of range
  CHECK_THROWS_AS(parse_graph("2 1\nzero one"), format_error);   // malformed
  CHECK_THROWS_AS(parse_graph("2 2\n0 1"), format_error);        // short
  CHECK_THROWS_AS(parse_graph("2 1\n0 1\n0 1"), format_error);   // long
  CHECK_THROWS_AS(parse_graph(""), format_error);
}

TEST_CASE("family spec tokens round-trip") {
  FamilySpec dn = parse_family_spec("dn:7");
  CHECK(dn.family == Family::polytope_D);
  CHECK(dn.params == std::vector<int>{7});
  CHECK(to_string(dn) == "dn:7");

  FamilySpec knp = parse_family_spec("knp:5,4");
  CHECK(knp.family == Family::complete_bipartite);
  CHECK(knp.params == std::vector<int>{5, 4});

  CHECK(parse_family_spec("grid2:9").family == Family::grid2);
  CHECK(parse_family_spec("polytope_Rpp:6") == parse_family_spec("rpp:6"));
  CHECK(parse_family_spec("path:5") == parse_family_spec("pn:5"));
}

TEST_CASE("family spec parameters are range-checked") {
  CHECK_THROWS_AS(parse_family_spec("dn:4"), range_error);
  CHECK_THROWS_AS(parse_family_spec("cycle:2"), range_error);
  CHECK_THROWS_AS(parse_family_spec("wheel:3"), range_error);
  CHECK_THROWS_AS(parse_family_spec("knp:2,3"), range_error);
  CHECK_THROWS_AS(parse_family_spec("nosuch:5"), format_error);
  CHECK_THROWS_AS(parse_family_spec("path"), format_error);
  CHECK_THROWS_AS(parse_family_spec("path:x"), format_error);
}

TEST_CASE("generators satisfy the handshake identity and are deterministic") {
  std::vector<FamilySpec> specs = {
      {Family::path, {9}},          {Family::cycle, {8}},
      {Family::complete, {6}},      {Family::star, {7}},
      {Family::wheel, {7}},         {Family::complete_bipartite, {5, 3}},
      {Family::grid2, {6}},         {Family::grid, {3, 4}},
      {Family::polytope_D, {8}},    {Family::polytope_Rpp, {6}},
      {Family::polytope_A, {7}},
  };
  for (const auto& spec : specs) {
    CAPTURE(to_string(spec));
    Graph g = make_family(spec);
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(make_family(spec) == g);
    CHECK(write_graph(make_family(spec)) == write_graph(g));
  }
}

TEST_CASE("both cubic polytope generators are 3-regular for all swept n") {
  for (int n = 5; n <= 20; ++n) {
    CHECK(is_cubic(make_family({Family::polytope_D, {n}})));
    CHECK(is_cubic(make_family({Family::polytope_Rpp, {n}})));
  }
}

TEST_CASE("parse after write is the identity on generated families") {
  for (const char* token : {"path:6", "cycle:5", "kn:5", "sn:6", "wn:5",
                            "knp:4,3", "grid2:5", "dn:6", "rpp:5", "an:5"}) {
    Graph g = make_family(parse_family_spec(token));
    std::string text = write_graph(g);
    Graph back = parse_graph(text);
    CHECK(back == g);
    CHECK(write_graph(back) == text);
  }
}
