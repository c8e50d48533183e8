// Acceptance runner: every release criterion as one pass/fail line, with
// the tolerances pinned in code. Exit status 0 only if all criteria hold.

#include "pottskit/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace pottskit;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass;
    double max_residual;
    size_t instances;
    double seconds;
    int rejected;
};

Criterion run(int number, const std::string& title,
              const std::vector<VerificationReport>& reports) {
    Criterion c{number, title, true, 0, 0, 0, 0};
    for (const VerificationReport& r : reports) {
        c.pass = c.pass && r.passed();
        c.max_residual = std::max(c.max_residual, r.max_residual());
        c.instances += r.instances.size();
        c.seconds += r.elapsed_seconds;
        c.rejected += r.rejected_samples;
        if (const InstanceResult* f = r.first_failure())
            std::printf("        %s: first failure %s (residual %.3g)\n", r.suite.c_str(),
                        f->descriptor.c_str(), f->residual);
    }
    std::string rejected_note =
        c.rejected ? " (" + std::to_string(c.rejected) + " rejected)" : std::string();
    std::printf("[%s] criterion %2d: %s — %zu instances, max residual %.3g, %.1fs%s\n",
                c.pass ? "PASS" : "FAIL", number, title.c_str(), c.instances, c.max_residual,
                c.seconds, rejected_note.c_str());
    std::fflush(stdout);
    return c;
}

} // namespace

int main() {
    SuiteOptions opt; // seed 42, tol 1e-9, corpus bound 6, 100 samples
    std::vector<Criterion> results;

    results.push_back(run(1,
                          "partition identities (reduced-weight form, deletion-contraction, "
                          "union/join laws; exact, corpus <= 6 edges, n in {2,3,4})",
                          {suite_partition_identities(opt)}));

    results.push_back(run(2, "partition function from the Tutte polynomial (20 draws per graph, "
                             "exact; K3 spot value 72)",
                          {suite_z_tutte(opt)}));

    results.push_back(run(3,
                          "convolution identity, chromatic/flow exchange and the four derived "
                          "formulas (exact, corpus <= 5 edges)",
                          {suite_biggs(opt), suite_matiyasevich(opt), suite_four_formulas(opt)}));

    results.push_back(run(4,
                          "order-shift expansions and the vertex convolution (exact, <= 4 edges "
                          "resp. <= 6 vertices, moduli in {1,2,3}^2)",
                          {suite_shift_product(opt), suite_shift_sum(opt),
                           suite_vertex_convolution(opt)}));

    results.push_back(run(5,
                          "Ising star-triangle invariance: Z, boundary ratios and reduced-weight "
                          "log-derivatives to 1e-9 (20 draws per triangle fixture)",
                          {suite_star_triangle(opt)}));

    results.push_back(run(6,
                          "general modulus: the signed-graph family satisfies the constraint "
                          "exactly, the five-equation system to 1e-12, Z-invariance exactly; "
                          "generic triples rejected",
                          {suite_general_n(opt)}));

    results.push_back(run(7, "local Yang-Baxter equation to 1e-12 on 100 samples, closed-form "
                             "left side at 20 points, R R^T = I to 1e-13",
                          {suite_lyb(opt)}));

    results.push_back(run(8,
                          "tetrahedron equation, both forms, to 1e-8 over 100 accepted samples; "
                          "six-factor product invariant along both move sequences to 1e-8; "
                          "S-conjugation inverse roundtrip to 1e-9",
                          {suite_tetrahedron(opt)}));

    results.push_back(run(9, "boundary-data reconstruction roundtrip to 1e-9 on 50 tuples with "
                             "scale invariance",
                          {suite_reconstruction(opt)}));

    results.push_back(run(10, "fourteen-term relation: constraint residual < 1e-12, base case and "
                              "pendant ambient to 1e-9",
                          {suite_fourteen_term(opt)}));

    int failed = 0;
    for (const Criterion& c : results)
        if (!c.pass) failed++;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
