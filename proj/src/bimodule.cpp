#include "tlau/bimodule.hpp"
#include "tlau/errors.hpp"

namespace tlau {

namespace {

void check_action_shapes(const FiniteAlgebra& a, std::size_t dim, const std::vector<Matrix>& actions,
                         const char* what)
{
    if (actions.size() != a.dim())
        throw ShapeMismatch(std::string(what) + ": expected one action matrix per algebra basis element");
    for (const auto& m : actions)
        if (m.rows() != dim || m.cols() != dim)
            throw ShapeMismatch(std::string(what) + ": action matrix must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
}

Matrix combine(const std::vector<Matrix>& actions, const Vector& coeffs, std::size_t dim)
{
    Matrix out(dim, dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out += actions[i] * coeffs[i];
    return out;
}

// sum_m c(i, j, m) actions[m]
Matrix action_of_product(const FiniteAlgebra& a, const std::vector<Matrix>& actions, std::size_t i,
                         std::size_t j, std::size_t dim)
{
    Vector coeffs(a.dim());
    for (std::size_t m = 0; m < a.dim(); ++m) coeffs[m] = a.coeff(i, j, m);
    return combine(actions, coeffs, dim);
}

std::string pair_tag(std::size_t i, std::size_t j)
{
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

} // namespace

std::optional<std::string> find_left_module_violation(const FiniteAlgebra& a, std::size_t dim,
                                                      const std::vector<Matrix>& left)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (action_of_product(a, left, i, j, dim) != left[i] * left[j])
                return "left action: (a_i a_j).x != a_i.(a_j.x) at " + pair_tag(i, j);
    return std::nullopt;
}

std::optional<std::string> find_bimodule_violation(const FiniteAlgebra& a, std::size_t dim,
                                                   const std::vector<Matrix>& left,
                                                   const std::vector<Matrix>& right)
{
    if (auto v = find_left_module_violation(a, dim, left)) return v;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (action_of_product(a, right, i, j, dim) != right[j] * right[i])
                return "right action: x.(a_i a_j) != (x.a_i).a_j at " + pair_tag(i, j);
            if (right[j] * left[i] != left[i] * right[j])
                return "compatibility: (a_i.x).a_j != a_i.(x.a_j) at " + pair_tag(i, j);
        }
    return std::nullopt;
}

Bimodule Bimodule::make(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right)
{
    check_action_shapes(algebra, dim, left, "left action");
    check_action_shapes(algebra, dim, right, "right action");
    if (auto v = find_bimodule_violation(algebra, dim, left, right)) throw AxiomViolation(*v);
    return Bimodule(std::move(algebra), dim, std::move(left), std::move(right));
}

Bimodule Bimodule::unchecked(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left,
                             std::vector<Matrix> right)
{
    check_action_shapes(algebra, dim, left, "left action");
    check_action_shapes(algebra, dim, right, "right action");
    return Bimodule(std::move(algebra), dim, std::move(left), std::move(right));
}

Bimodule Bimodule::from_tensors(FiniteAlgebra algebra, std::size_t dim, const Tensor3& left, const Tensor3& right)
{
    std::size_t d = algebra.dim();
    if (left.extent(0) != d || left.extent(1) != dim || left.extent(2) != dim)
        throw ShapeMismatch("left action tensor must be dim(A) x dim(X) x dim(X)");
    if (right.extent(0) != dim || right.extent(1) != d || right.extent(2) != dim)
        throw ShapeMismatch("right action tensor must be dim(X) x dim(A) x dim(X)");
    std::vector<Matrix> l(d, Matrix(dim, dim)), r(d, Matrix(dim, dim));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y) {
                l[i](y, x) = left(i, x, y);
                r[i](y, x) = right(x, i, y);
            }
    return make(std::move(algebra), dim, std::move(l), std::move(r));
}

Matrix Bimodule::left_action(const Vector& a) const { return combine(left_, a, dim_); }
Matrix Bimodule::right_action(const Vector& a) const { return combine(right_, a, dim_); }

Tensor3 Bimodule::left_tensor() const
{
    Tensor3 t(algebra_.dim(), dim_, dim_);
    for (std::size_t i = 0; i < algebra_.dim(); ++i)
        for (std::size_t x = 0; x < dim_; ++x)
            for (std::size_t y = 0; y < dim_; ++y) t(i, x, y) = left_[i](y, x);
    return t;
}

Tensor3 Bimodule::right_tensor() const
{
    Tensor3 t(dim_, algebra_.dim(), dim_);
    for (std::size_t i = 0; i < algebra_.dim(); ++i)
        for (std::size_t x = 0; x < dim_; ++x)
            for (std::size_t y = 0; y < dim_; ++y) t(x, i, y) = right_[i](y, x);
    return t;
}

LeftModule LeftModule::make(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left)
{
    check_action_shapes(algebra, dim, left, "left action");
    if (auto v = find_left_module_violation(algebra, dim, left)) throw AxiomViolation(*v);
    return LeftModule(std::move(algebra), dim, std::move(left));
}

LeftModule LeftModule::unchecked(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left)
{
    check_action_shapes(algebra, dim, left, "left action");
    return LeftModule(std::move(algebra), dim, std::move(left));
}

Matrix LeftModule::left_action(const Vector& a) const { return combine(left_, a, dim_); }

bool intertwines(const LeftModule& source, const LeftModule& target, const Matrix& m)
{
    if (!(source.algebra() == target.algebra())) throw ShapeMismatch("modules over different algebras");
    if (m.rows() != target.dim() || m.cols() != source.dim()) throw ShapeMismatch("module map shape mismatch");
    for (std::size_t i = 0; i < source.algebra().dim(); ++i)
        if (m * source.left(i) != target.left(i) * m) return false;
    return true;
}

bool intertwines(const Bimodule& source, const Bimodule& target, const Matrix& m)
{
    if (!(source.algebra() == target.algebra())) throw ShapeMismatch("modules over different algebras");
    if (m.rows() != target.dim() || m.cols() != source.dim()) throw ShapeMismatch("module map shape mismatch");
    for (std::size_t i = 0; i < source.algebra().dim(); ++i) {
        if (m * source.left(i) != target.left(i) * m) return false;
        if (m * source.right(i) != target.right(i) * m) return false;
    }
    return true;
}

ModuleMap::ModuleMap(LeftModule source, LeftModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (!intertwines(source_, target_, matrix_)) throw AxiomViolation("map does not intertwine the actions");
}

Bimodule regular_bimodule(const FiniteAlgebra& a)
{
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(a.left_mult(a.basis_vector(i)));
        r.push_back(a.right_mult(a.basis_vector(i)));
    }
    return Bimodule::make(a, a.dim(), std::move(l), std::move(r));
}

LeftModule regular_left_module(const FiniteAlgebra& a)
{
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(a.left_mult(a.basis_vector(i)));
    return LeftModule::make(a, a.dim(), std::move(l));
}

Bimodule zero_bimodule(const FiniteAlgebra& a, std::size_t dim)
{
    std::vector<Matrix> z(a.dim(), Matrix(dim, dim));
    return Bimodule::make(a, dim, z, z);
}

Bimodule direct_sum(const Bimodule& x, const Bimodule& y)
{
    if (!(x.algebra() == y.algebra())) throw ShapeMismatch("direct sum of bimodules over different algebras");
    std::size_t n = x.dim() + y.dim();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < x.algebra().dim(); ++i) {
        Matrix li(n, n), ri(n, n);
        li.set_block(0, 0, x.left(i));
        li.set_block(x.dim(), x.dim(), y.left(i));
        ri.set_block(0, 0, x.right(i));
        ri.set_block(x.dim(), x.dim(), y.right(i));
        l.push_back(std::move(li));
        r.push_back(std::move(ri));
    }
    return Bimodule::make(x.algebra(), n, std::move(l), std::move(r));
}

Bimodule change_module_basis(const Bimodule& e, const Matrix& q)
{
    auto qinv = inverse(q);
    if (!qinv || q.rows() != e.dim()) throw ShapeMismatch("module basis change must be invertible of module dimension");
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < e.algebra().dim(); ++i) {
        l.push_back(*qinv * e.left(i) * q);
        r.push_back(*qinv * e.right(i) * q);
    }
    return Bimodule::make(e.algebra(), e.dim(), std::move(l), std::move(r));
}

LeftModule change_module_basis(const LeftModule& m, const Matrix& q)
{
    auto qinv = inverse(q);
    if (!qinv || q.rows() != m.dim()) throw ShapeMismatch("module basis change must be invertible of module dimension");
    std::vector<Matrix> l;
    for (const auto& a : m.left_actions()) l.push_back(*qinv * a * q);
    return LeftModule::make(m.algebra(), m.dim(), std::move(l));
}

Bimodule dual_bimodule(const Bimodule& e)
{
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < e.algebra().dim(); ++i) {
        l.push_back(e.right(i).transpose());
        r.push_back(e.left(i).transpose());
    }
    return Bimodule::make(e.algebra(), e.dim(), std::move(l), std::move(r));
}

LeftModule dual_left_module(const LeftModule& m)
{
    std::vector<Matrix> l;
    for (const auto& a : m.left_actions()) l.push_back(a.transpose());
    return LeftModule::make(opposite(m.algebra()), m.dim(), std::move(l));
}

Bimodule induce_via_T(const Bimodule& e, const AlgebraHom& t)
{
    if (!(e.algebra() == t.target())) throw ShapeMismatch("bimodule must live over the target of T");
    std::vector<Matrix> l, r;
    for (std::size_t j = 0; j < t.source().dim(); ++j) {
        Vector tj = t.matrix().col(j);
        l.push_back(e.left_action(tj));
        r.push_back(e.right_action(tj));
    }
    return Bimodule::make(t.source(), e.dim(), std::move(l), std::move(r));
}

std::string to_string(LauVariant v) { return v == LauVariant::standard ? "standard" : "as_printed"; }

LauVariant parse_variant(const std::string& text)
{
    if (text == "standard") return LauVariant::standard;
    if (text == "as_printed" || text == "as-printed") return LauVariant::as_printed;
    throw ParseError("unknown variant '" + text + "'");
}

InducedBimodule induce_lau_bimodule(const Bimodule& e, const LauProduct& l, LauVariant variant)
{
    if (!(e.algebra() == l.a)) throw ShapeMismatch("bimodule must live over the first factor");
    std::size_t da = l.dim_a(), db = l.dim_b(), n = e.dim();
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < da; ++i) {
        if (variant == LauVariant::standard) {
            left.push_back(e.left(i));
            right.push_back(e.right(i));
        } else {
            left.emplace_back(n, n);
            right.emplace_back(n, n);
        }
    }
    for (std::size_t j = 0; j < db; ++j) {
        Vector tj = l.hom.matrix().col(j);
        left.push_back(e.left_action(tj));
        right.push_back(e.right_action(tj));
    }
    auto finding = find_bimodule_violation(l.product, n, left, right);
    return {Bimodule::unchecked(l.product, n, std::move(left), std::move(right)), std::move(finding)};
}

FactorBimodules restrict_to_factors(const Bimodule& e, const LauProduct& l, BEmbedding embedding)
{
    if (!(e.algebra() == l.product)) throw ShapeMismatch("bimodule must live over the Lau product");
    std::size_t da = l.dim_a(), db = l.dim_b();
    std::vector<Matrix> la, ra, lb, rb;
    for (std::size_t i = 0; i < da; ++i) {
        la.push_back(e.left(i));
        ra.push_back(e.right(i));
    }
    for (std::size_t j = 0; j < db; ++j) {
        Vector element(da + db);
        element[da + j] = 1;
        if (embedding == BEmbedding::complement) {
            Vector tj = l.hom.matrix().col(j);
            for (std::size_t i = 0; i < da; ++i) element[i] = -tj[i];
        }
        lb.push_back(e.left_action(element));
        rb.push_back(e.right_action(element));
    }
    return {Bimodule::make(l.a, e.dim(), std::move(la), std::move(ra)),
            Bimodule::make(l.b, e.dim(), std::move(lb), std::move(rb))};
}

LeftModule sec2_left_actions(Side side, const LauProduct& l, const LeftModule& factor)
{
    std::size_t da = l.dim_a(), db = l.dim_b(), d = da + db;
    const Matrix& t = l.hom.matrix();
    if (factor.dim() != (side == Side::a ? da : db)) throw ShapeMismatch("factor module has the wrong dimension");
    std::vector<Matrix> actions;
    for (const auto& c : factor.left_actions()) {
        Matrix m(d, d);
        if (side == Side::a) {
            m.set_block(0, 0, c);
            m.set_block(0, da, c * t);
        } else {
            m.set_block(0, da, (t * c) * Scalar(-1));
            m.set_block(da, da, c);
        }
        actions.push_back(std::move(m));
    }
    if (auto v = find_left_module_violation(factor.algebra(), d, actions)) throw AxiomViolation(*v);
    return LeftModule::unchecked(factor.algebra(), d, std::move(actions));
}

FactorLeftModules restrict_left_module(const LeftModule& m, const LauProduct& l)
{
    std::size_t da = l.dim_a(), db = l.dim_b();
    if (m.dim() != da + db) throw ShapeMismatch("module does not live on the Lau product space");
    std::vector<Matrix> a, b;
    for (const auto& c : m.left_actions()) {
        a.push_back(c.block(0, 0, da, da));
        b.push_back(c.block(da, da, db, db));
    }
    auto av = find_left_module_violation(m.algebra(), da, a);
    auto bv = find_left_module_violation(m.algebra(), db, b);
    return {LeftModule::unchecked(m.algebra(), da, std::move(a)), LeftModule::unchecked(m.algebra(), db, std::move(b)),
            std::move(av), std::move(bv)};
}

LeftModule combined_lau_module(const LauProduct& l, const LeftModule& on_a, const LeftModule& on_b)
{
    if (!(on_a.algebra() == on_b.algebra())) throw ShapeMismatch("factor modules over different algebras");
    LeftModule ma = sec2_left_actions(Side::a, l, on_a);
    LeftModule mb = sec2_left_actions(Side::b, l, on_b);
    std::vector<Matrix> actions;
    for (std::size_t k = 0; k < ma.left_actions().size(); ++k) actions.push_back(ma.left(k) + mb.left(k));
    return LeftModule::make(on_a.algebra(), ma.dim(), std::move(actions));
}

LeftModule blockwise_module(const LeftModule& first, const LeftModule& second)
{
    if (!(first.algebra() == second.algebra())) throw ShapeMismatch("modules over different algebras");
    std::size_t d1 = first.dim(), d = d1 + second.dim();
    std::vector<Matrix> actions;
    for (std::size_t k = 0; k < first.left_actions().size(); ++k) {
        Matrix m(d, d);
        m.set_block(0, 0, first.left(k));
        m.set_block(d1, d1, second.left(k));
        actions.push_back(std::move(m));
    }
    return LeftModule::make(first.algebra(), d, std::move(actions));
}

DualSplit dual_product_split(const LauProduct& l)
{
    std::size_t da = l.dim_a(), db = l.dim_b(), d = da + db;
    DualSplit s{Matrix(d, da), Matrix(d, db), Matrix::identity(d)};
    s.q_a_star.set_block(0, 0, Matrix::identity(da));
    s.q_b_star.set_block(da, 0, Matrix::identity(db));
    return s;
}

Essentiality is_essential(const Bimodule& e)
{
    std::size_t n = e.dim(), d = e.algebra().dim();
    Matrix left_span(n, n * d), right_span(n, n * d);
    for (std::size_t i = 0; i < d; ++i) {
        left_span.set_block(0, i * n, e.left(i));
        right_span.set_block(0, i * n, e.right(i));
    }
    Essentiality r;
    r.dim = n;
    r.left_span_rank = rank(left_span);
    r.right_span_rank = rank(right_span);
    r.left = r.left_span_rank == n;
    r.right = r.right_span_rank == n;
    r.essential = r.left && r.right;
    return r;
}

} // namespace tlau
