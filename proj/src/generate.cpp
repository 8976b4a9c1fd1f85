#include "tlau/generate.hpp"
#include "tlau/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace tlau {

namespace {

struct Product {
    std::size_t i, j, k;
    long value;
};

FiniteAlgebra table(std::size_t dim, std::initializer_list<Product> products, std::vector<std::string> labels)
{
    Tensor3 c(dim, dim, dim);
    for (const auto& p : products) c(p.i, p.j, p.k) = p.value;
    return FiniteAlgebra::assemble(dim, std::move(c), std::move(labels));
}

Vector vec(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Specimen make(std::string family, FiniteAlgebra a, std::vector<Vector> chars, std::vector<Vector> idems)
{
    std::size_t d = a.dim();
    return Specimen{std::move(family), std::move(a), std::move(chars), std::move(idems), Matrix::identity(d)};
}

Specimen build_family(const std::string& name)
{
    if (name == "C1") return make(name, table(1, {{0, 0, 0, 1}}, {"e"}), {vec({1})}, {vec({1})});
    if (name == "Z1") return make(name, table(1, {}, {"z"}), {}, {});
    if (name == "D2")
        return make(name, table(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {"1", "eps"}), {vec({1, 0})},
                    {vec({1, 0})});
    if (name == "C1+C1")
        return make(name, table(2, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {"e1", "e2"}), {vec({1, 0}), vec({0, 1})},
                    {vec({1, 0}), vec({0, 1}), vec({1, 1})});
    if (name == "N2") return make(name, table(2, {{0, 0, 1, 1}}, {"x", "x2"}), {}, {});
    if (name == "Z2") return make(name, table(2, {}, {"z1", "z2"}), {}, {});
    if (name == "T3")
        return make(name,
                    table(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1}, {2, 0, 2, 1}, {1, 1, 2, 1}},
                          {"1", "x", "x2"}),
                    {vec({1, 0, 0})}, {vec({1, 0, 0})});
    if (name == "UT2")
        return make(name, table(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {"e11", "e12", "e22"}),
                    {vec({1, 0, 0}), vec({0, 0, 1})},
                    {vec({1, 0, 0}), vec({0, 0, 1}), vec({1, 0, 1}), vec({1, 1, 0}), vec({0, 1, 1})});
    if (name == "C1+D2")
        return make(name, table(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}, {"f", "1", "eps"}),
                    {vec({1, 0, 0}), vec({0, 1, 0})}, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})});
    if (name == "C1+C1+C1")
        return make(name, table(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}}, {"e1", "e2", "e3"}),
                    {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})},
                    {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1}),
                     vec({1, 1, 1})});
    throw Error("unknown algebra family '" + name + "'");
}

const std::vector<std::vector<std::string>>& family_names()
{
    static const std::vector<std::vector<std::string>> names = {
        {}, {"C1", "Z1"}, {"D2", "C1+C1", "N2", "Z2"}, {"T3", "UT2", "C1+D2", "C1+C1+C1"}};
    return names;
}

// Homomorphisms between canonical bases of two families: columns are images of source basis vectors.
const std::multimap<std::pair<std::string, std::string>, std::vector<Vector>>& cross_family_homs()
{
    static const std::multimap<std::pair<std::string, std::string>, std::vector<Vector>> homs = {
        {{"D2", "T3"}, {vec({1, 0, 0}), vec({0, 0, 1})}},
        {{"D2", "UT2"}, {vec({1, 0, 1}), vec({0, 1, 0})}},
        {{"T3", "D2"}, {vec({1, 0}), vec({0, 1}), vec({0, 0})}},
        {{"D2", "C1+D2"}, {vec({0, 1, 0}), vec({0, 0, 1})}},
        {{"D2", "C1+D2"}, {vec({1, 1, 0}), vec({0, 0, 1})}},
        {{"C1+D2", "D2"}, {vec({0, 0}), vec({1, 0}), vec({0, 1})}},
        {{"C1+C1", "UT2"}, {vec({1, 0, 0}), vec({0, 0, 1})}},
        {{"C1+C1", "C1+C1+C1"}, {vec({1, 0, 0}), vec({0, 1, 1})}},
    };
    return homs;
}

Bimodule character_bimodule(const FiniteAlgebra& a, const Vector& chi, const Vector& psi)
{
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(Matrix{{chi.empty() ? Scalar(0) : chi[i]}});
        r.push_back(Matrix{{psi.empty() ? Scalar(0) : psi[i]}});
    }
    return Bimodule::make(a, 1, std::move(l), std::move(r));
}

// Left regular action with right action by a character (or zero), or the mirror image.
Bimodule half_regular_bimodule(const FiniteAlgebra& a, const Vector& chi, bool regular_on_left)
{
    std::size_t d = a.dim();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix scalar = Matrix::identity(d) * (chi.empty() ? Scalar(0) : chi[i]);
        if (regular_on_left) {
            l.push_back(a.left_mult(a.basis_vector(i)));
            r.push_back(std::move(scalar));
        } else {
            l.push_back(std::move(scalar));
            r.push_back(a.right_mult(a.basis_vector(i)));
        }
    }
    return Bimodule::make(a, d, std::move(l), std::move(r));
}

LeftModule character_module(const FiniteAlgebra& a, const Vector& chi)
{
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(Matrix{{chi[i]}});
    return LeftModule::make(a, 1, std::move(l));
}

} // namespace

std::vector<Specimen> curated_families(std::size_t dim)
{
    std::vector<Specimen> out;
    if (dim >= family_names().size()) return out;
    for (const auto& name : family_names()[dim]) out.push_back(build_family(name));
    return out;
}

Specimen curated(const std::string& family) { return build_family(family); }

Specimen transport(const Specimen& s, const Matrix& p)
{
    auto pinv = inverse(p);
    if (!pinv) throw Error("transport by a singular matrix");
    Specimen out{s.family, change_basis(s.algebra, p), {}, {}, s.basis * p};
    for (const auto& chi : s.characters) out.characters.push_back(p.transpose().apply(chi));
    for (const auto& e : s.idempotents) out.idempotents.push_back(pinv->apply(e));
    return out;
}

std::uint64_t Rng::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Matrix InstanceGenerator::invertible(std::size_t n, bool gaussian)
{
    Matrix upper = Matrix::identity(n), lower = Matrix::identity(n);
    auto entry = [&]() {
        Scalar s(rng_.small(1));
        if (gaussian && rng_.chance(1, 3)) s += Scalar(mpq_class(0), mpq_class(rng_.small(1)));
        return s;
    };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            upper(r, c) = entry();
            lower(c, r) = entry();
        }
    return upper * lower;
}

std::optional<FiniteAlgebra> InstanceGenerator::rejection_sample(std::size_t dim)
{
    for (std::size_t attempt = 0; attempt < attempts_; ++attempt) {
        Tensor3 c(dim, dim, dim);
        bool nonzero = false;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    if (rng_.chance(1, 4)) {
                        c(i, j, k) = rng_.chance(1, 2) ? 1 : -1;
                        nonzero = true;
                    }
        if (!nonzero || find_associativity_violation(dim, c)) continue;
        return FiniteAlgebra::assemble(dim, std::move(c));
    }
    return std::nullopt;
}

Specimen InstanceGenerator::algebra(std::size_t dim, bool unital_only, bool allow_sampled)
{
    if (allow_sampled && !unital_only && rng_.chance(1, 4)) {
        if (auto a = rejection_sample(dim)) {
            std::vector<Vector> idems;
            if (a->unit()) idems.push_back(*a->unit());
            return Specimen{"sampled", *a, {}, std::move(idems), Matrix::identity(dim)};
        }
    }
    std::vector<Specimen> families = curated_families(dim);
    if (unital_only)
        std::erase_if(families, [](const Specimen& s) { return !s.algebra.is_unital(); });
    if (families.empty()) throw Error("no curated family of dimension " + std::to_string(dim));
    const Specimen& base = families[rng_.below(families.size())];
    return transport(base, invertible(dim, rng_.chance(1, 6)));
}

std::vector<AlgebraHom> InstanceGenerator::hom_candidates(const Specimen& b, const Specimen& a)
{
    std::size_t da = a.algebra.dim(), db = b.algebra.dim();
    std::vector<Matrix> mats;
    mats.emplace_back(da, db);
    auto pa_inv = inverse(a.basis);
    if (pa_inv && a.family != "sampled" && b.family != "sampled") {
        if (a.family == b.family) mats.push_back(*pa_inv * b.basis);
        auto range = cross_family_homs().equal_range({b.family, a.family});
        for (auto it = range.first; it != range.second; ++it)
            mats.push_back(*pa_inv * Matrix::from_columns(it->second, da) * b.basis);
    }
    auto outer = [&](const Vector& p, const Vector& chi) {
        Matrix m(da, db);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t c = 0; c < db; ++c) m(r, c) = p[r] * chi[c];
        return m;
    };
    for (const auto& chi : b.characters)
        for (const auto& p : a.idempotents) mats.push_back(outer(p, chi));
    for (std::size_t x = 0; x < b.characters.size(); ++x)
        for (std::size_t y = x + 1; y < b.characters.size(); ++y)
            for (const auto& p : a.idempotents)
                for (const auto& q : a.idempotents) {
                    if (!is_zero(a.algebra.multiply(p, q)) || !is_zero(a.algebra.multiply(q, p))) continue;
                    mats.push_back(outer(p, b.characters[x]) + outer(q, b.characters[y]));
                }

    std::vector<AlgebraHom> out;
    std::vector<Matrix> seen;
    for (auto& m : mats) {
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
        if (!check_homomorphism(b.algebra, a.algebra, m).ok) continue;
        seen.push_back(m);
        out.emplace_back(b.algebra, a.algebra, std::move(m));
    }
    return out;
}

AlgebraHom InstanceGenerator::hom(const Specimen& b, const Specimen& a)
{
    std::vector<AlgebraHom> c = hom_candidates(b, a);
    return c[rng_.below(c.size())];
}

Bimodule InstanceGenerator::conjugate(const Bimodule& e, std::size_t)
{
    return change_module_basis(e, invertible(e.dim(), rng_.chance(1, 6)));
}

LeftModule InstanceGenerator::conjugate(const LeftModule& m)
{
    return change_module_basis(m, invertible(m.dim(), rng_.chance(1, 6)));
}

std::optional<Bimodule> InstanceGenerator::essential_bimodule(const Specimen& s, std::size_t max_dim)
{
    const FiniteAlgebra& a = s.algebra;
    if (!a.is_unital() || max_dim == 0) return std::nullopt;
    std::size_t d = a.dim();
    std::size_t target = 1 + rng_.below(max_dim);
    std::optional<Bimodule> acc;
    std::size_t used = 0;
    for (int guard = 0; guard < 64 && used < target; ++guard) {
        std::size_t room = target - used;
        std::vector<std::function<Bimodule()>> options;
        const auto& chars = s.characters;
        if (d <= room) {
            options.push_back([&] { return regular_bimodule(a); });
            options.push_back([&] { return dual_bimodule(regular_bimodule(a)); });
            if (!chars.empty()) {
                options.push_back([&] { return half_regular_bimodule(a, chars[rng_.below(chars.size())], true); });
                options.push_back([&] { return half_regular_bimodule(a, chars[rng_.below(chars.size())], false); });
            }
        }
        if (!chars.empty())
            options.push_back([&] {
                return character_bimodule(a, chars[rng_.below(chars.size())], chars[rng_.below(chars.size())]);
            });
        if (options.empty()) break;
        Bimodule block = options[rng_.below(options.size())]();
        used += block.dim();
        acc = acc ? direct_sum(*acc, block) : block;
    }
    if (!acc) return std::nullopt;
    return conjugate(*acc, max_dim);
}

Bimodule InstanceGenerator::bimodule(const Specimen& s, std::size_t max_dim)
{
    const FiniteAlgebra& a = s.algebra;
    std::size_t d = a.dim();
    std::size_t target = 1 + rng_.below(max_dim);
    std::optional<Bimodule> acc;
    std::size_t used = 0;
    const auto& chars = s.characters;
    while (used < target) {
        std::size_t room = target - used;
        std::vector<std::function<Bimodule()>> options;
        options.push_back([&] { return zero_bimodule(a, 1); });
        if (d <= room && d > 0) {
            options.push_back([&] { return regular_bimodule(a); });
            options.push_back([&] { return dual_bimodule(regular_bimodule(a)); });
            options.push_back([&] { return half_regular_bimodule(a, {}, rng_.chance(1, 2)); });
        }
        if (!chars.empty())
            options.push_back([&] {
                Vector chi = chars[rng_.below(chars.size())];
                return rng_.chance(1, 2) ? character_bimodule(a, chi, chars[rng_.below(chars.size())])
                                         : character_bimodule(a, chi, {});
            });
        Bimodule block = options[rng_.below(options.size())]();
        used += block.dim();
        acc = acc ? direct_sum(*acc, block) : block;
    }
    return conjugate(*acc, max_dim);
}

LeftModule InstanceGenerator::unital_module(const Specimen& c, std::size_t dim)
{
    const FiniteAlgebra& a = c.algebra;
    std::size_t d = a.dim();
    std::optional<LeftModule> acc;
    std::size_t used = 0;
    while (used < dim) {
        std::size_t room = dim - used;
        bool can_regular = d <= room;
        bool can_char = !c.characters.empty();
        if (!can_regular && !can_char) throw Error("cannot fill a unital module of dimension " + std::to_string(dim));
        LeftModule block = (can_regular && (!can_char || rng_.chance(1, 2)))
                               ? regular_left_module(a)
                               : character_module(a, c.characters[rng_.below(c.characters.size())]);
        used += block.dim();
        acc = acc ? blockwise_module(*acc, block) : block;
    }
    if (!acc) return LeftModule::make(a, 0, std::vector<Matrix>(d, Matrix(0, 0)));
    return conjugate(*acc);
}

Matrix InstanceGenerator::module_map(const LeftModule& source, const LeftModule& target)
{
    Matrix m(target.dim(), source.dim());
    for (const auto& b : module_hom_basis(source, target)) {
        long k = rng_.small(2);
        if (k != 0) m += b * Scalar(k);
    }
    return m;
}

std::optional<Diagram> InstanceGenerator::mono(const Specimen& c, std::size_t dim_f, std::size_t dim_k)
{
    LeftModule f = unital_module(c, dim_f);
    LeftModule k = unital_module(c, dim_k);
    for (int attempt = 0; attempt < 24; ++attempt) {
        Matrix s = module_map(f, k);
        if (rank(s) == dim_f) return make_diagram(f, k, std::move(s), DiagramKind::mono);
    }
    return std::nullopt;
}

std::optional<Diagram> InstanceGenerator::epi(const Specimen& c, std::size_t dim_k, std::size_t dim_f)
{
    LeftModule k = unital_module(c, dim_k);
    LeftModule f = unital_module(c, dim_f);
    for (int attempt = 0; attempt < 24; ++attempt) {
        Matrix s = module_map(k, f);
        if (rank(s) == dim_f) return make_diagram(k, f, std::move(s), DiagramKind::epi);
    }
    return std::nullopt;
}

} // namespace tlau
