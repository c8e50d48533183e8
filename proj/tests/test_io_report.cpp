#include "doctest.h"

#include "pottskit/fourteen_term.hpp"
#include "pottskit/graph_gen.hpp"
#include "pottskit/io.hpp"
#include "pottskit/report.hpp"
#include "pottskit/suites.hpp"

using namespace pottskit;

TEST_CASE("graph json schema") {
    Json j = Json::parse(R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
    Multigraph g = graph_from_json(j);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(graph_from_json(graph_to_json(g)).isomorphic_to(g));
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,5]]})")),
                    std::out_of_range);
}

TEST_CASE("model json schema") {
    Json j = Json::parse(
        R"({"n": 2, "vertices": 2, "edges": [[0, 1, "3/2", 1], [0, 1, 2, "1/3"]]})");
    RationalModel m = model_from_json(j);
    CHECK(m.n == 2);
    CHECK(m.alpha(0) == Rational(3, 2));
    CHECK(m.beta(0) == Rational(1));
    CHECK(m.alpha(1) == Rational(2));
    CHECK(m.beta(1) == Rational(1, 3));
    // round-trips through the emitter
    RationalModel m2 = model_from_json(model_to_json(m));
    CHECK(m2.weights == m.weights);
    CHECK(m2.n == m.n);
    CHECK_THROWS_AS(model_from_json(Json::parse(R"({"vertices":1,"edges":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        model_from_json(Json::parse(R"({"n":2,"vertices":2,"edges":[[0,1,"x","1"]]})")),
        std::domain_error);
}

TEST_CASE("polynomial json") {
    UniPoly p(std::vector<Rational>{Rational(2), Rational(0), Rational(-1, 3)});
    Json j = unipoly_to_json(p);
    CHECK(j.at("coefficients").size() == 3);
    CHECK(j.at("coefficients").at(2).get<std::string>() == "-1/3");
}

TEST_CASE("verification report round-trips through json") {
    VerificationReport r;
    r.suite = "demo";
    r.seed = 17;
    r.tolerance = 1e-9;
    r.elapsed_seconds = 0.25;
    r.rejected_samples = 3;
    r.add("first", 0.0, 1e-9, true);
    r.add("second", 5e-10, 1e-9);
    r.add("third", 2e-8, 1e-9);
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->descriptor == "third");
    VerificationReport back = report_from_json(report_to_json(r));
    CHECK(back == r);
}

TEST_CASE("fourteen term relation") {
    FourteenTermInstance inst = make_fourteen_term_instance(42);
    CHECK(std::abs(inst.constraint_residual) < 1e-12);
    FourteenTermAmbient base;
    FourteenTermResult r = verify_fourteen_term(inst, base);
    CHECK(r.residual < 1e-9);
    FourteenTermAmbient pendant;
    pendant.extra_vertices = 1;
    pendant.extra_edges = {{0, 3}};
    pendant.extra_weights = {{2.0, 0.5}};
    CHECK(verify_fourteen_term(inst, pendant).residual < 1e-9);
    // a second extra edge between triangle vertices also works
    FourteenTermAmbient chord;
    chord.extra_edges = {{1, 2}};
    chord.extra_weights = {{0.8, 1.3}};
    CHECK(verify_fourteen_term(inst, chord).residual < 1e-9);

    // equal models degenerate: p = 1, q = 0 must be flagged
    FourteenTermInstance degen;
    degen.m2 = make_star_triangle_pair({2, 3, 1.5}, {1, 1, 1});
    degen.m1 = degen.m2;
    CHECK_THROWS_AS(
        (detail::fourteen_coeffs(degen), verify_fourteen_term(degen, FourteenTermAmbient{})),
        std::domain_error);
}

TEST_CASE("corpus generation") {
    CHECK(connected_multigraphs(1).size() == 2); // edge, loop
    CHECK(connected_multigraphs(2).size() == 4);
    auto c3 = connected_multigraphs(3);
    CHECK(c3.size() == 11);
    // generation is deterministic
    auto again = connected_multigraphs(3);
    REQUIRE(again.size() == c3.size());
    for (size_t i = 0; i < c3.size(); ++i)
        CHECK(c3[i].canonical_encoding() == again[i].canonical_encoding());
    // fixtures exist with the advertised shapes
    bool saw_gamma2 = false;
    for (const NamedFixture& f : named_fixtures()) {
        if (f.name == "gamma2") {
            saw_gamma2 = true;
            CHECK(f.graph.edge_count() == 6);
        }
    }
    CHECK(saw_gamma2);
    // triangle detection
    std::array<int, 3> tri;
    CHECK(find_triangle(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}), tri));
    CHECK_FALSE(find_triangle(Multigraph(3, {{0, 1}, {1, 2}}), tri));
    CHECK_FALSE(find_triangle(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}), tri));
}

TEST_CASE("thread cap environment variable") {
    setenv("POTTSKIT_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("POTTSKIT_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("parallel map is deterministic and exception-safe") {
    std::vector<int> out(200, -1);
    parallel_for_index(out.size(), [&](size_t i) { out[i] = static_cast<int>(i) * 3; }, 4);
    for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 3);
    // exceptions propagate out of the pool
    CHECK_THROWS_AS(parallel_for_index(
                        50, [&](size_t i) { if (i == 33) throw std::runtime_error("boom"); }, 4),
                    std::runtime_error);
    // exact summation is order-independent: the same suite instance list in
    // any schedule gives identical reports
    SuiteOptions opt;
    opt.max_edges = 2;
    VerificationReport a = suite_matiyasevich(opt);
    VerificationReport b = suite_matiyasevich(opt);
    CHECK(a.instances == b.instances);
}

TEST_CASE("suites are wired and small runs pass") {
    SuiteOptions opt;
    opt.max_edges = 3;
    opt.samples = 4;
    for (const std::string name : {"matiyasevich", "general-n", "percolation", "lyb"}) {
        auto reports = run_suites(name, opt);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].passed());
        CHECK(reports[0].suite == name);
    }
    CHECK_THROWS_AS(run_suites("no-such-suite", opt), std::invalid_argument);
}
