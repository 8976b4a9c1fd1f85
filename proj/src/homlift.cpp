#include "tlau/homlift.hpp"
#include "tlau/errors.hpp"

namespace tlau {

Matrix generalized_inverse(const Matrix& s)
{
    Echelon e = row_reduce(s);
    std::size_t r = e.pivots.size();
    if (r == 0) return Matrix(s.cols(), s.rows());
    Matrix c = column_space(s);
    Matrix f = e.reduced.block(0, 0, r, s.cols());
    Matrix fh = adjoint(f), ch = adjoint(c);
    auto ffh_inv = inverse(f * fh);
    auto chc_inv = inverse(ch * c);
    if (!ffh_inv || !chc_inv) throw Error("rank factorization produced a singular Gram matrix");
    return fh * *ffh_inv * *chc_inv * ch;
}

Diagram make_diagram(LeftModule source, LeftModule target, Matrix s, DiagramKind kind)
{
    if (!(source.algebra() == target.algebra())) throw ValidationError("diagram modules over different algebras");
    if (s.rows() != target.dim() || s.cols() != source.dim()) throw ValidationError("diagram map has wrong shape");
    if (!intertwines(source, target, s)) throw ValidationError("diagram map is not a module map");
    std::size_t rk = rank(s);
    if (kind == DiagramKind::mono && rk != source.dim()) throw ValidationError("diagram map is not injective");
    if (kind == DiagramKind::epi && rk != target.dim()) throw ValidationError("diagram map is not surjective");
    return Diagram{std::move(source), std::move(target), std::move(s), kind};
}

namespace {

// Adds rows of R L_src - L_tgt R = 0 for R : src -> tgt stored row-major.
void add_intertwining_rows(Matrix& m, std::size_t& row, const LeftModule& src, const LeftModule& tgt)
{
    std::size_t ns = src.dim(), nt = tgt.dim();
    for (std::size_t i = 0; i < src.algebra().dim(); ++i) {
        const Matrix& ls = src.left(i);
        const Matrix& lt = tgt.left(i);
        for (std::size_t r = 0; r < nt; ++r)
            for (std::size_t c = 0; c < ns; ++c) {
                for (std::size_t p = 0; p < ns; ++p)
                    if (!ls(p, c).is_zero()) m(row, r * ns + p) += ls(p, c);
                for (std::size_t p = 0; p < nt; ++p)
                    if (!lt(r, p).is_zero()) m(row, p * ns + c) -= lt(r, p);
                ++row;
            }
    }
}

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

void require_same_algebra(const Diagram& d, const LeftModule& m)
{
    if (!(d.source.algebra() == m.algebra())) throw ValidationError("problem module over a different algebra");
}

} // namespace

std::vector<Matrix> module_hom_basis(const LeftModule& source, const LeftModule& target)
{
    std::size_t ns = source.dim(), nt = target.dim();
    Matrix m(source.algebra().dim() * nt * ns, nt * ns);
    std::size_t row = 0;
    add_intertwining_rows(m, row, source, target);
    Matrix kernel = nullspace(m);
    std::vector<Matrix> basis;
    for (std::size_t k = 0; k < kernel.cols(); ++k) basis.push_back(unvec(kernel.col(k), nt, ns));
    return basis;
}

LiftResult solve_injective_lift(const InjectiveProblem& p)
{
    const Diagram& d = p.diagram;
    require_same_algebra(d, p.module);
    std::size_t nf = d.source.dim(), nk = d.target.dim(), ne = p.module.dim();
    if (p.lambda.rows() != ne || p.lambda.cols() != nf) throw ShapeMismatch("lambda must map F -> E");
    if (!intertwines(d.source, p.module, p.lambda)) throw ValidationError("lambda is not a module map");
    std::size_t cdim = d.source.algebra().dim();
    LiftResult out;
    out.unknowns = ne * nk;
    out.constraints = ne * nf + cdim * ne * nk;
    Matrix m(out.constraints, out.unknowns);
    Vector rhs(out.constraints);
    std::size_t row = 0;
    for (std::size_t r = 0; r < ne; ++r)
        for (std::size_t f = 0; f < nf; ++f) {
            for (std::size_t c = 0; c < nk; ++c) m(row, r * nk + c) = d.s(c, f);
            rhs[row] = p.lambda(r, f);
            ++row;
        }
    add_intertwining_rows(m, row, d.target, p.module);
    SolveResult s = solve(m, rhs);
    if (s.solution)
        out.certificate = LiftCertificate{unvec(*s.solution, ne, nk), LiftEquation::r_after_s};
    else
        out.witness = std::move(s.witness);
    return out;
}

LiftResult solve_projective_lift(const ProjectiveProblem& p)
{
    const Diagram& d = p.diagram;
    require_same_algebra(d, p.module);
    std::size_t nk = d.source.dim(), nf = d.target.dim(), np = p.module.dim();
    if (p.lambda.rows() != nf || p.lambda.cols() != np) throw ShapeMismatch("lambda must map P -> F");
    if (!intertwines(p.module, d.target, p.lambda)) throw ValidationError("lambda is not a module map");
    std::size_t cdim = d.source.algebra().dim();
    LiftResult out;
    out.unknowns = nk * np;
    out.constraints = nf * np + cdim * nk * np;
    Matrix m(out.constraints, out.unknowns);
    Vector rhs(out.constraints);
    std::size_t row = 0;
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t q = 0; q < np; ++q) {
            for (std::size_t k = 0; k < nk; ++k) m(row, k * np + q) = d.s(f, k);
            rhs[row] = p.lambda(f, q);
            ++row;
        }
    add_intertwining_rows(m, row, p.module, d.source);
    SolveResult s = solve(m, rhs);
    if (s.solution)
        out.certificate = LiftCertificate{unvec(*s.solution, nk, np), LiftEquation::s_after_r};
    else
        out.witness = std::move(s.witness);
    return out;
}

bool verify_lift(const InjectiveProblem& p, const Matrix& r)
{
    if (r.rows() != p.module.dim() || r.cols() != p.diagram.target.dim()) return false;
    return r * p.diagram.s == p.lambda && intertwines(p.diagram.target, p.module, r);
}

bool verify_lift(const ProjectiveProblem& p, const Matrix& r)
{
    if (r.rows() != p.diagram.source.dim() || r.cols() != p.module.dim()) return false;
    return p.diagram.s * r == p.lambda && intertwines(p.module, p.diagram.source, r);
}

FlatnessReport flatness_check(const LeftModule& k, const std::vector<FlatnessProbe>& probes)
{
    LeftModule dual = dual_left_module(k);
    FlatnessReport report;
    for (const auto& probe : probes) {
        LiftResult r = solve_injective_lift(InjectiveProblem{probe.diagram, dual, probe.lambda});
        bool ok = r.certificate.has_value();
        report.passed.push_back(ok);
        report.witnesses.push_back(r.witness);
        if (!ok) report.all_pass = false;
    }
    return report;
}

namespace {

LiftCertificate certify(const InjectiveProblem& p, Matrix r, const char* what)
{
    if (!verify_lift(p, r)) throw CertificateInvalid(std::string(what) + ": transferred map fails its lifting check");
    return LiftCertificate{std::move(r), LiftEquation::r_after_s};
}

LiftCertificate certify(const ProjectiveProblem& p, Matrix r, const char* what)
{
    if (!verify_lift(p, r)) throw CertificateInvalid(std::string(what) + ": transferred map fails its lifting check");
    return LiftCertificate{std::move(r), LiftEquation::s_after_r};
}

LeftModule checked_restriction(const LeftModule& m, const std::optional<std::string>& violation)
{
    if (violation) throw ValidationError("restricted action is not a module: " + *violation);
    return m;
}

} // namespace

InjectiveProblem lift_injective_to_product(const LauProduct& l, Side side, const InjectiveProblem& factor)
{
    CanonicalMaps maps = canonical_maps(l);
    LeftModule product = sec2_left_actions(side, l, factor.module);
    Matrix lambda = (side == Side::a ? maps.q_a : maps.eta_b) * factor.lambda;
    return InjectiveProblem{factor.diagram, std::move(product), std::move(lambda)};
}

LiftCertificate transfer_inj_product_to_factor(const LauProduct& l, Side side, const LiftCertificate& product,
                                               const InjectiveProblem& factor)
{
    CanonicalMaps maps = canonical_maps(l);
    Matrix r = (side == Side::a ? maps.p_a : maps.p_b) * product.r;
    return certify(factor, std::move(r), "injective product-to-factor transfer");
}

std::pair<InjectiveProblem, InjectiveProblem> split_injective_problem(const LauProduct& l,
                                                                      const InjectiveProblem& product)
{
    CanonicalMaps maps = canonical_maps(l);
    FactorLeftModules f = restrict_left_module(product.module, l);
    return {InjectiveProblem{product.diagram, checked_restriction(f.a, f.a_violation), maps.theta_a * product.lambda},
            InjectiveProblem{product.diagram, checked_restriction(f.b, f.b_violation), maps.p_b * product.lambda}};
}

LiftCertificate transfer_inj_factors_to_product(const LauProduct& l, const LiftCertificate& a,
                                                const LiftCertificate& b, const InjectiveProblem& product)
{
    CanonicalMaps maps = canonical_maps(l);
    Matrix r = maps.q_a * a.r + maps.eta_b * b.r;
    return certify(product, std::move(r), "injective factors-to-product transfer");
}

std::pair<ProjectiveProblem, ProjectiveProblem> split_projective_problem(const LauProduct& l,
                                                                         const ProjectiveProblem& product)
{
    CanonicalMaps maps = canonical_maps(l);
    FactorLeftModules f = restrict_left_module(product.module, l);
    return {ProjectiveProblem{product.diagram, checked_restriction(f.a, f.a_violation), product.lambda * maps.q_a},
            ProjectiveProblem{product.diagram, checked_restriction(f.b, f.b_violation), product.lambda * maps.q_b}};
}

LiftCertificate transfer_proj_factors_to_product(const LauProduct& l, const LiftCertificate& a,
                                                 const LiftCertificate& b, const ProjectiveProblem& product)
{
    CanonicalMaps maps = canonical_maps(l);
    Matrix r = a.r * maps.p_a + b.r * maps.p_b;
    return certify(product, std::move(r), "projective factors-to-product transfer");
}

std::pair<InjectiveProblem, InjectiveProblem> split_flat_problem(const LauProduct& l, const InjectiveProblem& product)
{
    DualSplit split = dual_product_split(l);
    FactorLeftModules f = restrict_left_module(product.module, l);
    Matrix lambda_a = split.q_a_star.transpose() * split.iso * product.lambda;
    Matrix lambda_b = split.q_b_star.transpose() * split.iso * product.lambda;
    return {InjectiveProblem{product.diagram, checked_restriction(f.a, f.a_violation), std::move(lambda_a)},
            InjectiveProblem{product.diagram, checked_restriction(f.b, f.b_violation), std::move(lambda_b)}};
}

LiftCertificate transfer_flat(const LauProduct& l, const LiftCertificate& a_star, const LiftCertificate& b_star,
                              const InjectiveProblem& product)
{
    DualSplit split = dual_product_split(l);
    Matrix r = split.q_a_star * a_star.r + split.q_b_star * b_star.r;
    return certify(product, std::move(r), "flat transfer");
}

} // namespace tlau
