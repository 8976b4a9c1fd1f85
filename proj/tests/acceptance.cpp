#include "oracle.hpp"
#include "tlau/errors.hpp"
#include "tlau/generate.hpp"
#include "tlau/hochschild.hpp"
#include "tlau/homlift.hpp"
#include "tlau/multiplier.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace tlau;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::string rate(std::size_t num, std::size_t den)
{
    std::ostringstream os;
    os << num << "/" << den;
    if (den) os << " (" << (100.0 * static_cast<double>(num) / static_cast<double>(den)) << "%)";
    return os.str();
}

// A pair of unital factors with a homomorphism between them.
LauProduct unital_product(InstanceGenerator& g, std::size_t max_dim)
{
    Specimen a = g.algebra(1 + g.rng().below(max_dim), true);
    Specimen b = g.algebra(1 + g.rng().below(max_dim), true);
    return lau_product(g.hom(b, a));
}

Specimen specimen_of(const FiniteAlgebra& a)
{
    return Specimen{"given", a, {}, {}, Matrix::identity(a.dim())};
}

Outcome complex_property()
{
    InstanceGenerator g(1001);
    std::size_t instances = 0, failures = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 3);
        for (std::size_t n = 0; n <= 2; ++n)
            if (!(coboundary(n + 1, x) * coboundary(n, x)).is_zero()) ++failures;
        ++instances;
    }
    return {instances >= 100 && failures == 0,
            std::to_string(instances) + " instances, n <= 2, " + std::to_string(failures) + " nonzero composites"};
}

Outcome oracle_equivalence()
{
    InstanceGenerator g(1002);
    std::size_t compared = 0, mismatches = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 3);
        for (std::size_t n = 0; n <= 3; ++n) {
            if (power(a.algebra.dim(), n) * x.dim() > 64) continue;
            CohomologyReport r = cohomology(n, x);
            oracle::Dims o = oracle::cohomology(n, x);
            if (r.dim_c != o.c || r.dim_z != o.z || r.dim_b != o.b || r.dim_h != o.h) ++mismatches;
            ++compared;
        }
    }
    return {compared > 0 && mismatches == 0,
            std::to_string(compared) + " (instance, n) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome known_values()
{
    Bimodule d2 = regular_bimodule(curated("D2").algebra);
    Bimodule c1 = regular_bimodule(curated("C1").algebra);
    std::size_t o0 = oracle::cohomology(0, d2).h, o1 = oracle::cohomology(1, d2).h;
    std::size_t p0 = cohomology(0, d2).dim_h, p1 = cohomology(1, d2).dim_h;
    std::size_t c = cohomology(1, c1).dim_h, oc = oracle::cohomology(1, c1).h;
    bool ok = o0 == 2 && o1 == 1 && p0 == o0 && p1 == o1 && c == 0 && oc == 0;
    return {ok, "H0(D2,D2) oracle " + std::to_string(o0) + " pipeline " + std::to_string(p0) + ", H1(D2,D2) oracle " +
                    std::to_string(o1) + " pipeline " + std::to_string(p1) + ", H1(C1,C1) " + std::to_string(c)};
}

struct SuiteTally {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t coordinate_pass = 0;
    std::size_t printed_checks = 0;
    std::size_t printed_pass = 0;
};

SuiteTally lau_suite(std::uint64_t seed, std::size_t n, std::size_t max_dim, int target)
{
    InstanceGenerator g(seed);
    SuiteTally t;
    auto record = [&](const LauCohomologyReport& r) {
        ++t.checks;
        if (!r.hypotheses_hold || !r.equal) ++t.failures;
        if (r.equal_coordinate) ++t.coordinate_pass;
    };
    for (int trial = 0; trial < target; ++trial) {
        std::size_t before = t.checks;
        LauProduct l = unital_product(g, max_dim);
        if (l.product.dim() <= 4) record(hn_lau_check(l, regular_bimodule(l.product), n));
        Specimen a = specimen_of(l.a);
        if (auto e = g.essential_bimodule(a, 4)) {
            record(hn_lau_check(l, *e, LauVariant::standard, n));
            LauCohomologyReport printed = hn_lau_check(l, *e, LauVariant::as_printed, n);
            ++t.printed_checks;
            if (printed.hypotheses_hold && printed.equal) ++t.printed_pass;
        }
        if (t.checks > before) ++t.instances;
    }
    return t;
}

Outcome suite_outcome(const SuiteTally& t, std::size_t min_instances)
{
    bool ok = t.instances >= min_instances && t.checks >= min_instances && t.failures == 0;
    return {ok, std::to_string(t.instances) + " instances, " + std::to_string(t.checks) + " checks, " +
                    std::to_string(t.failures) + " failures; as_printed pass rate " +
                    rate(t.printed_pass, t.printed_checks) + "; coordinate embedding pass rate " +
                    rate(t.coordinate_pass, t.checks)};
}

Outcome multiplier_decomposition()
{
    InstanceGenerator g(1006);
    std::size_t splits = 0, split_failures = 0, embeddings = 0, embedding_failures = 0;
    auto check_embedding = [&](const FiniteAlgebra& a) {
        RegularEmbedding re = regular_embedding(multiplier_algebra(a));
        ++embeddings;
        if (!re.homomorphism || !re.bijective()) ++embedding_failures;
    };
    for (int trial = 0; trial < 60; ++trial) {
        LauProduct l = unital_product(g, 3);
        MultiplierSplitReport r = multiplier_split_check(l.hom);
        ++splits;
        if (!r.hypotheses_hold || r.dim_m_product != r.dim_m_a + r.dim_m_b || !r.dims_equal) ++split_failures;
        check_embedding(l.a);
        check_embedding(l.b);
        check_embedding(l.product);
    }
    return {split_failures == 0 && embedding_failures == 0,
            std::to_string(splits) + " splits, " + std::to_string(split_failures) + " dimension failures; " +
                std::to_string(embeddings) + " unital embeddings, " + std::to_string(embedding_failures) +
                " not isomorphisms"};
}

Outcome transfer_formulas()
{
    InstanceGenerator g(1007);
    std::size_t inj_up = 0, inj_down = 0, proj = 0, flat = 0, failures = 0;
    const std::size_t need = 50;
    for (int trial = 0; trial < 2000 && (inj_up < need || inj_down < need || proj < need || flat < need); ++trial) {
        Specimen c = g.algebra(1 + trial % 2, true);
        LauProduct l = unital_product(g, 3);
        std::size_t da = l.dim_a(), db = l.dim_b();
        CanonicalMaps maps = canonical_maps(l);
        try {
            if (inj_up < need || inj_down < need) {
                if (auto d = g.mono(c, 1, 1 + trial % 2)) {
                    LeftModule ma = g.unital_module(c, da), mb = g.unital_module(c, db);
                    InjectiveProblem pa{*d, ma, g.module_map(d->source, ma)};
                    InjectiveProblem pb{*d, mb, g.module_map(d->source, mb)};
                    LiftResult ra = solve_injective_lift(pa), rb = solve_injective_lift(pb);
                    if (ra.certificate && rb.certificate) {
                        InjectiveProblem product{*d, combined_lau_module(l, ma, mb),
                                                 maps.q_a * pa.lambda + maps.eta_b * pb.lambda};
                        LiftCertificate r = transfer_inj_factors_to_product(l, *ra.certificate, *rb.certificate, product);
                        if (!verify_lift(product, r.r)) ++failures;
                        ++inj_up;
                    }
                    if (ra.certificate && rb.certificate) {
                        bool both = true;
                        for (Side side : {Side::a, Side::b}) {
                            const InjectiveProblem& factor = side == Side::a ? pa : pb;
                            LiftResult rp = solve_injective_lift(lift_injective_to_product(l, side, factor));
                            if (!rp.certificate) {
                                both = false;
                                continue;
                            }
                            LiftCertificate back = transfer_inj_product_to_factor(l, side, *rp.certificate, factor);
                            if (!verify_lift(factor, back.r)) ++failures;
                        }
                        if (both) ++inj_down;
                    }
                }
            }
            if (proj < need) {
                if (auto d = g.epi(c, 1 + trial % 2, 1)) {
                    LeftModule pm = blockwise_module(g.unital_module(c, da), g.unital_module(c, db));
                    ProjectiveProblem product{*d, pm, g.module_map(pm, d->target)};
                    auto [pa, pb] = split_projective_problem(l, product);
                    LiftResult ra = solve_projective_lift(pa), rb = solve_projective_lift(pb);
                    if (ra.certificate && rb.certificate) {
                        LiftCertificate r = transfer_proj_factors_to_product(l, *ra.certificate, *rb.certificate, product);
                        if (!verify_lift(product, r.r)) ++failures;
                        ++proj;
                    }
                }
            }
            if (flat < need) {
                Specimen cop{c.family, opposite(c.algebra), c.characters, {}, c.basis};
                if (auto d = g.mono(cop, 1, 1 + trial % 2)) {
                    LeftModule target = blockwise_module(g.unital_module(cop, da), g.unital_module(cop, db));
                    InjectiveProblem product{*d, target, g.module_map(d->source, target)};
                    auto [fa, fb] = split_flat_problem(l, product);
                    LiftResult ra = solve_injective_lift(fa), rb = solve_injective_lift(fb);
                    if (ra.certificate && rb.certificate) {
                        LiftCertificate r = transfer_flat(l, *ra.certificate, *rb.certificate, product);
                        if (!verify_lift(product, r.r)) ++failures;
                        ++flat;
                    }
                }
            }
        } catch (const Error& e) {
            std::cerr << "transfer error: " << e.what() << "\n";
            ++failures;
        }
    }
    bool ok = failures == 0 && inj_up >= need && inj_down >= need && proj >= need && flat >= need;
    return {ok, "injective factors->product " + std::to_string(inj_up) + ", product->factors " +
                    std::to_string(inj_down) + ", projective " + std::to_string(proj) + ", flat " +
                    std::to_string(flat) + ", " + std::to_string(failures) + " invalid certificates"};
}

Outcome solver_completeness()
{
    InstanceGenerator g(1008);
    std::size_t injective = 0, projective = 0, feasible = 0, disagreements = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        Specimen c = g.algebra(1 + trial % 2, true);
        std::size_t small = 1 + g.rng().below(2), big = small + g.rng().below(2);
        std::size_t e_dim = 1 + g.rng().below(3);
        if (small + big + e_dim > 6) continue;
        LeftModule e = g.unital_module(c, e_dim);
        if (trial % 2 == 0) {
            auto d = g.mono(c, small, big);
            if (!d) continue;
            InjectiveProblem p{*d, e, g.module_map(d->source, e)};
            LiftResult r = solve_injective_lift(p);
            bool solver = r.certificate && verify_lift(p, r.certificate->r);
            if (solver != oracle::injective_lift_exists(p)) ++disagreements;
            if (!r.certificate && !r.witness) ++disagreements;
            feasible += solver;
            ++injective;
        } else {
            auto d = g.epi(c, big, small);
            if (!d) continue;
            ProjectiveProblem p{*d, e, g.module_map(e, d->target)};
            LiftResult r = solve_projective_lift(p);
            bool solver = r.certificate && verify_lift(p, r.certificate->r);
            if (solver != oracle::projective_lift_exists(p)) ++disagreements;
            if (!r.certificate && !r.witness) ++disagreements;
            feasible += solver;
            ++projective;
        }
    }
    std::size_t total = injective + projective;
    return {total > 0 && injective > 0 && projective > 0 && disagreements == 0 && feasible < total,
            std::to_string(injective) + " injective and " + std::to_string(projective) + " projective diagrams, " +
                std::to_string(feasible) + " feasible, " + std::to_string(disagreements) + " disagreements"};
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism()
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tlau_acceptance";
    fs::create_directories(dir);
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
        fs::path inst = dir / ("random" + std::to_string(run) + ".json");
        fs::path report = dir / ("verify" + std::to_string(run) + ".json");
        std::string cli = TLAU_CLI;
        std::string gen = cli + " random --seed 0 --count 5 --format json --out " + inst.string();
        std::string ver = cli + " verify-h1 " + inst.string() + " --format json --out " + report.string();
        int s1 = std::system(gen.c_str());
        int s2 = std::system(ver.c_str());
        if (s1 != 0 || s2 != 0)
            return {false, "cli exited with " + std::to_string(s1) + "/" + std::to_string(s2)};
        bytes[run] = read_file(inst) + read_file(report);
    }
    return {!bytes[0].empty() && bytes[0] == bytes[1],
            std::to_string(bytes[0].size()) + " bytes per run, " + (bytes[0] == bytes[1] ? "identical" : "different")};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"complex property", complex_property},
        {"oracle equivalence", oracle_equivalence},
        {"known values", known_values},
        {"first cohomology of Lau products", [] { return suite_outcome(lau_suite(1004, 1, 3, 80), 50); }},
        {"second cohomology of Lau products", [] { return suite_outcome(lau_suite(1005, 2, 2, 80), 50); }},
        {"multiplier decomposition", multiplier_decomposition},
        {"transfer formulas", transfer_formulas},
        {"solver completeness", solver_completeness},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu %s: %s  [%s, %.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
