#include "tlau/commands.hpp"
#include "tlau/errors.hpp"
#include "tlau/generate.hpp"
#include "tlau/multiplier.hpp"

#include <cstdio>
#include <sstream>

namespace tlau {

namespace {

Json rational(const mpq_class& q) { return q.get_str(); }

Json cochain_json(const Cochain& c) { return vector_to_json(c.coeffs); }

Json cohomology_json(const CohomologyReport& r)
{
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(cochain_json(c));
    return Json{{"n", r.n},           {"dim_C", r.dim_c}, {"dim_Z", r.dim_z},
                {"dim_B", r.dim_b},   {"dim_H", r.dim_h}, {"representatives", reps}};
}

Json lau_report_json(const LauCohomologyReport& r)
{
    Json j{{"n", r.n},
           {"hypotheses", {{"a_unital", r.a_unital}, {"b_unital", r.b_unital}, {"e_essential", r.e_essential},
                           {"hold", r.hypotheses_hold}}},
           {"asserted", r.hypotheses_hold},
           {"lhs_dim", r.lhs_dim},
           {"rhs_a_dim", r.rhs_a_dim},
           {"rhs_b_dim", r.rhs_b_dim},
           {"equal", r.equal},
           {"b_embedding", "b -> (-T(b), b)"},
           {"coordinate_embedding", {{"rhs_b_dim", r.rhs_b_dim_coordinate}, {"equal", r.equal_coordinate}}}};
    j["variant"] = r.variant ? Json(to_string(*r.variant)) : Json("direct");
    if (r.induce_finding) j["induce_finding"] = *r.induce_finding;
    return j;
}

const HomEntry& find_hom(const InstanceFile& f, const std::string& name)
{
    auto it = f.homs.find(name);
    if (it == f.homs.end()) throw ValidationError("no hom named '" + name + "'");
    return it->second;
}

const FiniteAlgebra& find_algebra(const InstanceFile& f, const std::string& name)
{
    auto it = f.algebras.find(name);
    if (it == f.algebras.end()) throw ValidationError("no algebra named '" + name + "'");
    return it->second;
}

const Bimodule& find_bimodule(const InstanceFile& f, const std::string& name)
{
    auto it = f.modules.find(name);
    if (it == f.modules.end()) throw ValidationError("no module named '" + name + "'");
    const Bimodule* b = std::get_if<Bimodule>(&it->second.module);
    if (!b) throw ValidationError("module '" + name + "' is a left module, a bimodule is required");
    return *b;
}

InstanceFile load_valid(const std::string& file) { return require_valid(load_instance_file(file)); }

struct VerifyJob {
    std::string module;
    std::optional<Bimodule> over_product;
    std::optional<Bimodule> over_a;
};

std::vector<VerifyJob> verify_jobs(const InstanceFile& f, const HomEntry& h, const LauProduct& l,
                                   const std::optional<std::string>& module)
{
    std::vector<VerifyJob> jobs;
    auto add = [&](const std::string& name) {
        if (name == "regular") {
            jobs.push_back(VerifyJob{name, regular_bimodule(l.product), std::nullopt});
            return;
        }
        const Bimodule& e = find_bimodule(f, name);
        if (e.algebra() == l.product)
            jobs.push_back(VerifyJob{name, e, std::nullopt});
        else if (e.algebra() == l.a)
            jobs.push_back(VerifyJob{name, std::nullopt, e});
        else
            throw ValidationError("module '" + name + "' is over neither A nor the product for hom");
    };
    if (module) {
        add(*module);
        return jobs;
    }
    add("regular");
    for (const auto& [name, entry] : f.modules) {
        const Bimodule* e = std::get_if<Bimodule>(&entry.module);
        if (!e) continue;
        if (entry.algebra_ref == h.target || e->algebra() == l.product) add(name);
    }
    return jobs;
}

} // namespace

OutputFormat parse_format(const std::string& text)
{
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    throw ParseError("unknown format '" + text + "' (expected text or json)");
}

CommandOutput cmd_check(const std::string& file)
{
    LoadResult r = load_instance_file(file);
    Json objects = Json::object();
    for (const auto& c : r.checks) {
        Json entry{{"ok", c.ok}, {"message", c.message}};
        if (!c.witness.is_null()) entry["witness"] = c.witness;
        objects[c.section][c.name] = entry;
    }
    return CommandOutput{Json{{"objects", objects}, {"all_ok", r.all_ok()}}, r.all_ok() ? 0 : 1};
}

CommandOutput cmd_lau(const std::string& file, const std::string& hom, const std::string& name)
{
    InstanceFile f = load_valid(file);
    const HomEntry& h = find_hom(f, hom);
    LauProduct l = lau_product(h.hom);
    Json alg = algebra_to_json(l.product);
    alg["factors"] = Json{{"a", h.target}, {"b", h.source}, {"hom", hom}};
    NormData nd = rescale_norms(h.hom);
    Json norms{{"submultiplicativity_constant", rational(nd.submultiplicativity_constant)},
               {"t_norm", rational(nd.t_norm)},
               {"rescale_factor", rational(nd.rescale_factor)},
               {"norm_warning", nd.norm_warning}};
    Json out{{"algebras", {{name, alg}}}, {"norms", norms}};
    if (l.product.unit()) out["unit"] = vector_to_json(*l.product.unit());
    return CommandOutput{out, 0};
}

CommandOutput cmd_hochschild(const std::string& file, const std::optional<std::string>& algebra,
                             const std::string& module, const RunConfig& cfg)
{
    InstanceFile f = load_valid(file);
    std::optional<Bimodule> x;
    if (module == "regular") {
        if (!algebra) throw ValidationError("the regular module needs an algebra");
        x = regular_bimodule(find_algebra(f, *algebra));
    } else {
        x = find_bimodule(f, module);
        if (algebra && !(x->algebra() == find_algebra(f, *algebra)))
            throw ValidationError("module '" + module + "' is not over algebra '" + *algebra + "'");
    }
    Json report = cohomology_json(cohomology(cfg.n, *x, cfg.cap));
    report["module"] = module;
    if (algebra) report["algebra"] = *algebra;
    return CommandOutput{report, 0};
}

CommandOutput cmd_verify(const std::string& file, const std::optional<std::string>& hom,
                         const std::optional<std::string>& module, const RunConfig& cfg)
{
    InstanceFile f = load_valid(file);
    std::vector<std::string> homs;
    if (hom)
        homs.push_back(*hom);
    else
        for (const auto& [name, h] : f.homs) homs.push_back(name);
    Json results = Json::array();
    int code = 0;
    for (const auto& name : homs) {
        const HomEntry& h = find_hom(f, name);
        LauProduct l = lau_product(h.hom);
        for (const auto& job : verify_jobs(f, h, l, module)) {
            LauCohomologyReport r = job.over_a ? hn_lau_check(l, *job.over_a, cfg.variant, cfg.n, cfg.cap)
                                               : hn_lau_check(l, *job.over_product, cfg.n, cfg.cap);
            Json j = lau_report_json(r);
            j["hom"] = name;
            j["module"] = job.module;
            if (r.hypotheses_hold && !r.equal) code = 1;
            results.push_back(std::move(j));
        }
    }
    return CommandOutput{Json{{"checks", results}, {"all_equal", code == 0}}, code};
}

CommandOutput cmd_multiplier(const std::string& file, const std::optional<std::string>& algebra,
                             const std::optional<std::string>& hom)
{
    if (algebra && hom) throw ParseError("give either an algebra or a hom, not both");
    InstanceFile f = load_valid(file);
    int code = 0;
    Json algebras = Json::array(), splits = Json::array();
    auto one_algebra = [&](const std::string& name) {
        const FiniteAlgebra& a = find_algebra(f, name);
        MultiplierAlgebra m = multiplier_algebra(a);
        RegularEmbedding re = regular_embedding(m);
        algebras.push_back(Json{{"algebra", name},
                                {"dim", a.dim()},
                                {"dim_M", m.structure.dim()},
                                {"unital", a.is_unital()},
                                {"regular_embedding",
                                 {{"homomorphism", re.homomorphism},
                                  {"injective", re.injective},
                                  {"surjective", re.surjective}}},
                                {"degenerate", !a.is_unital() || !re.bijective()}});
        if (a.is_unital() && !re.bijective()) code = 1;
    };
    auto one_hom = [&](const std::string& name) {
        MultiplierSplitReport r = multiplier_split_check(find_hom(f, name).hom);
        splits.push_back(Json{{"hom", name},
                              {"dim_M_A", r.dim_m_a},
                              {"dim_M_B", r.dim_m_b},
                              {"dim_M_product", r.dim_m_product},
                              {"dim_factor_side", r.dim_factor_side},
                              {"dims_equal", r.dims_equal},
                              {"iso_found", r.iso_found},
                              {"candidate", r.candidate},
                              {"hypothesis_flags",
                               {{"a_unital", r.a_unital}, {"b_unital", r.b_unital}, {"hold", r.hypotheses_hold}}},
                              {"asserted", r.hypotheses_hold}});
        if (r.hypotheses_hold && !r.dims_equal) code = 1;
    };
    if (algebra) one_algebra(*algebra);
    if (hom) one_hom(*hom);
    if (!algebra && !hom) {
        for (const auto& [name, a] : f.algebras) one_algebra(name);
        for (const auto& [name, h] : f.homs) one_hom(name);
    }
    Json out = Json::object();
    if (!algebras.empty()) out["algebras"] = algebras;
    if (!splits.empty()) out["splits"] = splits;
    return CommandOutput{out, code};
}

CommandOutput cmd_lift(const std::string& file, const std::string& diagram, const std::optional<std::string>& lambda)
{
    InstanceFile f = load_valid(file);
    auto it = f.diagrams.find(diagram);
    if (it == f.diagrams.end()) throw ValidationError("no diagram named '" + diagram + "'");
    const DiagramEntry& d = it->second;
    Matrix sg = generalized_inverse(d.diagram.s);
    Json out{{"diagram", diagram},
             {"kind", d.diagram.kind == DiagramKind::mono ? "mono" : "epi"},
             {"admissible", {{"generalized_inverse", matrix_to_json(sg)},
                             {"s_sg_s_equals_s", d.diagram.s * sg * d.diagram.s == d.diagram.s}}}};
    Json lifts = Json::object();
    int code = 0;
    for (const auto& [name, lam] : d.lambdas) {
        if (lambda && name != *lambda) continue;
        const LeftModule& m = std::get<LeftModule>(f.modules.at(lam.module).module);
        LiftResult r;
        bool verified = false;
        if (d.diagram.kind == DiagramKind::mono) {
            InjectiveProblem p{d.diagram, m, lam.matrix};
            r = solve_injective_lift(p);
            if (r.certificate) verified = verify_lift(p, r.certificate->r);
        } else {
            ProjectiveProblem p{d.diagram, m, lam.matrix};
            r = solve_projective_lift(p);
            if (r.certificate) verified = verify_lift(p, r.certificate->r);
        }
        Json j{{"module", lam.module},
               {"lift_exists", r.certificate.has_value()},
               {"unknowns", r.unknowns},
               {"constraints", r.constraints}};
        if (r.certificate) {
            j["equation"] = r.certificate->equation == LiftEquation::r_after_s ? "R S = lambda" : "S R = lambda";
            j["r"] = matrix_to_json(r.certificate->r);
            j["verified"] = verified;
        } else {
            j["witness"] = vector_to_json(*r.witness);
            code = 1;
        }
        lifts[name] = j;
    }
    if (lambda && lifts.empty()) throw ValidationError("diagram '" + diagram + "' has no lambda '" + *lambda + "'");
    out["lifts"] = lifts;
    return CommandOutput{out, code};
}

CommandOutput cmd_random(std::uint64_t seed, const std::vector<std::size_t>& dims, std::size_t count)
{
    if (dims.size() != 2) throw ParseError("dims must be two integers 'dimA,dimB'");
    for (std::size_t d : dims)
        if (d == 0 || d > 3) throw ParseError("random dims must lie in 1..3");
    InstanceGenerator g(seed);
    std::vector<Specimen> families = curated_families(dims[0]);
    Json algebras = Json::object(), homs = Json::object(), modules = Json::object();
    for (std::size_t i = 0; i < count; ++i) {
        char tag[24];
        std::snprintf(tag, sizeof tag, "%03zu", i);
        std::string an = std::string("A") + tag, bn = std::string("B") + tag;
        Specimen a = transport(families[i % families.size()], g.invertible(dims[0]));
        Specimen b = g.algebra(dims[1], false, true);
        AlgebraHom t = g.hom(b, a);
        Json aj = algebra_to_json(a.algebra), bj = algebra_to_json(b.algebra);
        aj["family"] = a.family;
        bj["family"] = b.family;
        algebras[an] = aj;
        algebras[bn] = bj;
        homs[std::string("T") + tag] = hom_to_json(bn, an, t.matrix());
        std::optional<Bimodule> e = g.essential_bimodule(a, 3);
        modules[std::string("E") + tag] = module_to_json(an, e ? *e : g.bimodule(a, 2));
    }
    Json out = Json::object();
    if (count > 0) out = Json{{"algebras", algebras}, {"homs", homs}, {"modules", modules}};
    return CommandOutput{out, 0};
}

namespace {

void render_text(std::ostream& os, const Json& j, int indent)
{
    std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar_line = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto is_flat = [](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_array() || (x.is_object() && !(x.contains("re") && x.size() <= 2))) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive()) {
                os << pad << k << ": " << scalar_line(v) << '\n';
            } else if (is_flat(v) || (v.is_array() && v.empty()) || (v.is_object() && v.empty())) {
                os << pad << k << ": " << v.dump() << '\n';
            } else {
                os << pad << k << ":\n";
                render_text(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive() || is_flat(v)) {
                os << pad << "- " << (v.is_primitive() ? scalar_line(v) : v.dump()) << '\n';
            } else {
                os << pad << "-\n";
                render_text(os, v, indent + 2);
            }
        }
    } else {
        os << pad << scalar_line(j) << '\n';
    }
}

} // namespace

std::string render(const Json& report, OutputFormat format)
{
    if (format == OutputFormat::json) return report.dump(2) + "\n";
    std::ostringstream os;
    render_text(os, report, 0);
    return os.str();
}

} // namespace tlau
