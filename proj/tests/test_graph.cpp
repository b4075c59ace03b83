#include <doctest.h>

#include <random>
#include <sstream>

#include "coreval/graph.hpp"
#include "coreval/graph_export.hpp"
#include "oracles.hpp"

using namespace coreval;
using oracle::Rational;

namespace {

Message msg(std::string id, std::string author, std::int64_t t, std::vector<std::string> mentions = {},
            std::optional<std::string> reply = {}, std::optional<std::string> rt = {})
{
    Message m;
    m.id = std::move(id);
    m.author = std::move(author);
    m.created_at = Timestamp{std::chrono::seconds{t}};
    m.text = "x";
    m.mentions = std::move(mentions);
    m.reply_to = std::move(reply);
    m.retweet_of = std::move(rt);
    return m;
}

InteractionGraph graph_of(std::size_t n, const oracle::Edges& e) { return InteractionGraph::from_edges(n, e); }

} // namespace

TEST_CASE("brandes matches shortest path enumeration exactly")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const double p = 0.15 + 0.7 * double(rng() % 100) / 100.0;
        const auto adj = oracle::adjacency(n, oracle::random_edges(n, p, rng));
        const auto exact = brandes_betweenness<Rational>(adj);
        const auto approx = brandes_betweenness<double>(adj);
        const auto truth = oracle::betweenness_by_enumeration(adj);
        for (std::size_t v = 0; v < n; ++v) {
            CHECK(exact[v] == truth[v]);
            CHECK(approx[v] == doctest::Approx(boost::rational_cast<double>(truth[v])).epsilon(1e-12));
        }
    }
}

TEST_CASE("hand-checked betweenness")
{
    // Path a-b-c-d: b and c each sit on two pairs.
    const auto g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto b = betweenness(g);
    CHECK(b == std::vector<double>{0, 2, 2, 0});
    // Square: each opposite pair has two geodesics.
    const auto sq = betweenness(graph_of(4, oracle::cycle(4)));
    CHECK(sq == std::vector<double>{0.5, 0.5, 0.5, 0.5});
}

TEST_CASE("betweenness is identical for any thread count")
{
    std::mt19937_64 rng(11);
    const auto g = graph_of(300, oracle::random_edges(300, 0.02, rng));
    const auto one = betweenness(g, 1);
    for (unsigned t : {2u, 3u, 8u}) CHECK(betweenness(g, t) == one);
}

TEST_CASE("density and centralization on known shapes")
{
    CHECK(density(graph_of(0, {})) == 0.0);
    CHECK(density(graph_of(1, {})) == 0.0);
    CHECK(density(graph_of(5, oracle::complete(5))) == 1.0);
    CHECK(density(graph_of(4, {{0, 1}})) == doctest::Approx(1.0 / 6.0));

    for (std::size_t n = 3; n <= 40; ++n) {
        const auto s = graph_of(n, oracle::star(n));
        CHECK(group_degree_centralization(s) == 1.0);
        CHECK(group_betweenness_centralization(s) == 1.0);
    }

    const auto path = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(group_degree_centralization(path) == doctest::Approx(1.0 / 3.0));
    CHECK(group_betweenness_centralization(path) == doctest::Approx(4.0 / 9.0));

    CHECK(group_degree_centralization(graph_of(2, {{0, 1}})) == 0.0);
    CHECK(group_betweenness_centralization(graph_of(2, {{0, 1}})) == 0.0);
}

TEST_CASE("vertex-transitive graphs have zero centralization")
{
    std::vector<std::pair<std::size_t, oracle::Edges>> shapes;
    for (std::size_t n = 3; n <= 30; ++n) shapes.emplace_back(n, oracle::cycle(n));
    for (std::size_t n = 3; n <= 12; ++n) shapes.emplace_back(n, oracle::complete(n));
    for (unsigned d = 2; d <= 7; ++d) shapes.emplace_back(std::size_t(1) << d, oracle::hypercube(d));
    shapes.emplace_back(10, oracle::petersen());
    shapes.emplace_back(13, oracle::circulant(13, {1, 5}));
    shapes.emplace_back(20, oracle::circulant(20, {1, 3, 10}));
    shapes.emplace_back(31, oracle::circulant(31, {2, 7, 11}));
    for (const auto& [n, e] : shapes) {
        const auto g = graph_of(n, e);
        CHECK(group_degree_centralization(g) == 0.0);
        CHECK(group_betweenness_centralization(g) == 0.0);
    }
}

TEST_CASE("centralization matches the Freeman definition on small graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 11;
        const auto e = oracle::random_edges(n, 0.4, rng);
        const auto adj = oracle::adjacency(n, e);
        const auto g = graph_of(n, e);
        CHECK(group_degree_centralization(g) ==
              doctest::Approx(boost::rational_cast<double>(oracle::freeman_degree(adj))).epsilon(1e-12));
        CHECK(group_betweenness_centralization(g) ==
              doctest::Approx(boost::rational_cast<double>(oracle::freeman_betweenness(adj))).epsilon(1e-9));
    }
}

TEST_CASE("scores stay in the unit interval")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const double p = std::pow(10.0, -2.5 * double(rng() % 1000) / 1000.0);
        const auto c = connectivity(graph_of(n, oracle::random_edges(n, p, rng)));
        for (double x : {c.density, c.group_degree_centralization, c.group_betweenness_centralization}) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
        }
    }
}

TEST_CASE("graph builder resolves mentions, replies and retweets")
{
    const std::vector<Message> ms = {
        msg("1", "ann", 0, {"bob", "ann"}),
        msg("2", "bob", 10, {}, "1"),
        msg("3", "cy", 20, {}, {}, "1"),
        msg("4", "dee", 30, {}, "missing"),
        msg("5", "bob", 40, {"ann"}),
    };
    const AuthorIndex authors(ms);
    const auto g = build_graph(std::span<const Message>(ms), authors);
    REQUIRE(g.node_count() == 4);
    CHECK(std::vector<std::string>(g.nodes().begin(), g.nodes().end()) ==
          std::vector<std::string>{"ann", "bob", "cy", "dee"});
    CHECK(g.arcs().size() == 5); // ann->bob, ann->ann, bob->ann (reply), cy->ann (rt), bob->ann
    CHECK(g.simple_edge_count() == 2);
    CHECK(g.dangling_references() == 1);
    CHECK(g.message_count() == 5);
    const auto ann = *g.find("ann");
    CHECK(g.degree(ann) == 2);
    CHECK(g.degree(*g.find("dee")) == 0);
    CHECK_FALSE(g.find("zed"));
}

TEST_CASE("graphml and dot exports list every node and arc")
{
    const std::vector<Message> ms = {msg("1", "ann", 0, {"bob"}), msg("2", "bob", 3600, {}, "1")};
    const AuthorIndex authors(ms);
    const auto g = build_graph(std::span<const Message>(ms), authors);
    std::ostringstream gml, dot;
    write_graphml(gml, g, Orientation::Employees);
    write_dot(dot, g, Orientation::Employees);
    const auto x = gml.str();
    CHECK(x.find("<graphml") != std::string::npos);
    CHECK(x.find("<node id=\"ann\"") != std::string::npos);
    CHECK(x.find(">reply<") != std::string::npos);
    CHECK(x.find("1970-01-01T01:00:00Z") != std::string::npos);
    const auto d = dot.str();
    CHECK(d.rfind("digraph", 0) == 0);
    CHECK(d.find("\"ann\" -> \"bob\"") != std::string::npos);
    CHECK(d.find("\"bob\" -> \"ann\"") != std::string::npos);
}
