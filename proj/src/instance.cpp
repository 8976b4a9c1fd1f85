#include "tlau/instance.hpp"
#include "tlau/errors.hpp"

#include <fstream>
#include <sstream>

namespace tlau {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return obj.at(key);
}

std::size_t size_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(where + ": field '" + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::string string_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

const Json& section(const Json& doc, const char* key)
{
    static const Json empty = Json::object();
    if (!doc.contains(key)) return empty;
    const Json& s = doc.at(key);
    if (!s.is_object()) throw ParseError(std::string("section '") + key + "' must be an object");
    return s;
}

std::vector<Matrix> matrices_from_tensor(const Tensor3& t, bool right)
{
    // left tensor l[i][x][y]; right tensor r[x][i][y]; both become per-i matrices acting on columns
    std::size_t d = right ? t.extent(1) : t.extent(0);
    std::size_t n = t.extent(2);
    std::vector<Matrix> out(d, Matrix(n, n));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) out[i](y, x) = right ? t(x, i, y) : t(i, x, y);
    return out;
}

void fail(LoadResult& r, const char* sec, const std::string& name, std::string message, Json witness = nullptr)
{
    r.checks.push_back(CheckEntry{sec, name, false, std::move(message), std::move(witness)});
}

void pass(LoadResult& r, const char* sec, const std::string& name)
{
    r.checks.push_back(CheckEntry{sec, name, true, "ok", nullptr});
}

const LeftModule* find_left(const InstanceFile& f, const std::string& name)
{
    auto it = f.modules.find(name);
    if (it == f.modules.end()) return nullptr;
    return std::get_if<LeftModule>(&it->second.module);
}

} // namespace

bool LoadResult::all_ok() const
{
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

Scalar scalar_from_json(const Json& j)
{
    try {
        if (j.is_string()) return Scalar(Scalar::parse_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
        if (j.is_object()) {
            mpq_class re = j.contains("re") ? scalar_from_json(j.at("re")).re() : mpq_class(0);
            mpq_class im = j.contains("im") ? scalar_from_json(j.at("im")).re() : mpq_class(0);
            return Scalar(re, im);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad scalar: ") + e.what());
    }
    throw ParseError("bad scalar " + j.dump() + ": expected \"p/q\" or {re, im}");
}

Json scalar_to_json(const Scalar& s)
{
    if (s.is_real()) return s.re().get_str();
    return Json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

Vector vector_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

Json vector_to_json(const Vector& v)
{
    Json j = Json::array();
    for (const auto& x : v) j.push_back(scalar_to_json(x));
    return j;
}

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ParseError("matrix rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Json matrix_to_json(const Matrix& m)
{
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vector_to_json(m.row(r)));
    return j;
}

Tensor3 tensor_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2)
{
    auto shape_error = [&] {
        return ParseError("tensor must have shape " + std::to_string(d0) + "x" + std::to_string(d1) + "x" +
                          std::to_string(d2));
    };
    if (!j.is_array() || j.size() != d0) throw shape_error();
    Tensor3 t(d0, d1, d2);
    for (std::size_t i = 0; i < d0; ++i) {
        if (!j[i].is_array() || j[i].size() != d1) throw shape_error();
        for (std::size_t k = 0; k < d1; ++k) {
            if (!j[i][k].is_array() || j[i][k].size() != d2) throw shape_error();
            for (std::size_t l = 0; l < d2; ++l) t(i, k, l) = scalar_from_json(j[i][k][l]);
        }
    }
    return t;
}

Json tensor_to_json(const Tensor3& t)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < t.extent(0); ++i) {
        Json a = Json::array();
        for (std::size_t k = 0; k < t.extent(1); ++k) {
            Json b = Json::array();
            for (std::size_t l = 0; l < t.extent(2); ++l) b.push_back(scalar_to_json(t(i, k, l)));
            a.push_back(std::move(b));
        }
        j.push_back(std::move(a));
    }
    return j;
}

Json algebra_to_json(const FiniteAlgebra& a)
{
    Json j{{"dim", a.dim()}, {"structure", tensor_to_json(a.structure())}};
    if (!a.labels().empty()) j["labels"] = a.labels();
    return j;
}

Json hom_to_json(const std::string& source, const std::string& target, const Matrix& m)
{
    return Json{{"source", source}, {"target", target}, {"matrix", matrix_to_json(m)}};
}

Json module_to_json(const std::string& algebra_ref, const Bimodule& e)
{
    return Json{{"algebra_ref", algebra_ref},
                {"dim", e.dim()},
                {"left", tensor_to_json(e.left_tensor())},
                {"right", tensor_to_json(e.right_tensor())}};
}

Json module_to_json(const std::string& algebra_ref, const LeftModule& m)
{
    Tensor3 t(m.algebra().dim(), m.dim(), m.dim());
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        for (std::size_t x = 0; x < m.dim(); ++x)
            for (std::size_t y = 0; y < m.dim(); ++y) t(i, x, y) = m.left(i)(y, x);
    return Json{{"algebra_ref", algebra_ref}, {"dim", m.dim()}, {"left", tensor_to_json(t)}};
}

LoadResult load_instance(const Json& doc)
{
    if (doc.is_null()) return {};
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    LoadResult r;
    InstanceFile& f = r.instance;

    for (const auto& [name, j] : section(doc, "algebras").items()) {
        std::string where = "algebra '" + name + "'";
        std::size_t dim = size_field(j, "dim", where);
        Tensor3 c = tensor_from_json(field(j, "structure", where), dim, dim, dim);
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            if (!j.at("labels").is_array()) throw ParseError(where + ": labels must be an array");
            for (const auto& l : j.at("labels")) {
                if (!l.is_string()) throw ParseError(where + ": labels must be strings");
                labels.push_back(l.get<std::string>());
            }
        }
        try {
            f.algebras.emplace(name, FiniteAlgebra::assemble(dim, std::move(c), std::move(labels)));
            pass(r, "algebras", name);
        } catch (const AssociativityViolation& e) {
            fail(r, "algebras", name, e.what(), Json(e.witness));
        } catch (const Error& e) {
            fail(r, "algebras", name, e.what());
        }
    }

    for (const auto& [name, j] : section(doc, "homs").items()) {
        std::string where = "hom '" + name + "'";
        std::string src = string_field(j, "source", where), tgt = string_field(j, "target", where);
        Matrix m = matrix_from_json(field(j, "matrix", where));
        auto s = f.algebras.find(src), t = f.algebras.find(tgt);
        if (s == f.algebras.end() || t == f.algebras.end()) {
            fail(r, "homs", name, "unresolved algebra reference");
            continue;
        }
        if (m.rows() != t->second.dim() || (m.cols() != s->second.dim() && m.rows() != 0)) {
            fail(r, "homs", name, "matrix must be dim(target) x dim(source)");
            continue;
        }
        if (m.rows() == 0) m = Matrix(0, s->second.dim());
        HomCheck hc = check_homomorphism(s->second, t->second, m);
        if (!hc.ok) {
            fail(r, "homs", name, "not multiplicative", Json::array({hc.witness->first, hc.witness->second}));
            continue;
        }
        f.homs.emplace(name, HomEntry{src, tgt, AlgebraHom(s->second, t->second, std::move(m))});
        pass(r, "homs", name);
    }

    for (const auto& [name, j] : section(doc, "modules").items()) {
        std::string where = "module '" + name + "'";
        std::string ref = string_field(j, "algebra_ref", where);
        std::size_t dim = size_field(j, "dim", where);
        auto a = f.algebras.find(ref);
        if (a == f.algebras.end()) {
            fail(r, "modules", name, "unresolved algebra reference");
            continue;
        }
        std::size_t d = a->second.dim();
        auto left = matrices_from_tensor(tensor_from_json(field(j, "left", where), d, dim, dim), false);
        if (j.contains("right")) {
            auto right = matrices_from_tensor(tensor_from_json(j.at("right"), dim, d, dim), true);
            if (auto v = find_bimodule_violation(a->second, dim, left, right)) {
                fail(r, "modules", name, *v);
                continue;
            }
            f.modules.emplace(name, ModuleEntry{ref, Bimodule::unchecked(a->second, dim, left, right)});
        } else {
            if (auto v = find_left_module_violation(a->second, dim, left)) {
                fail(r, "modules", name, *v);
                continue;
            }
            f.modules.emplace(name, ModuleEntry{ref, LeftModule::unchecked(a->second, dim, left)});
        }
        pass(r, "modules", name);
    }

    for (const auto& [name, j] : section(doc, "diagrams").items()) {
        std::string where = "diagram '" + name + "'";
        std::string ref = string_field(j, "algebra_ref", where);
        std::string kind_text = string_field(j, "kind", where);
        if (kind_text != "mono" && kind_text != "epi") throw ParseError(where + ": kind must be 'mono' or 'epi'");
        DiagramKind kind = kind_text == "mono" ? DiagramKind::mono : DiagramKind::epi;
        std::string src = string_field(j, "source", where), tgt = string_field(j, "target", where);
        Matrix s = matrix_from_json(field(j, "map", where));
        std::map<std::string, std::pair<std::string, Matrix>> raw_lambdas;
        if (j.contains("lambdas")) {
            if (!j.at("lambdas").is_object()) throw ParseError(where + ": lambdas must be an object");
            for (const auto& [lname, lj] : j.at("lambdas").items())
                raw_lambdas.emplace(lname, std::pair{string_field(lj, "module", where + " lambda '" + lname + "'"),
                                                     matrix_from_json(field(lj, "matrix", where))});
        }
        const LeftModule* ms = find_left(f, src);
        const LeftModule* mt = find_left(f, tgt);
        if (!f.algebras.count(ref) || !ms || !mt) {
            fail(r, "diagrams", name, "unresolved algebra or left-module reference");
            continue;
        }
        if (!(ms->algebra() == f.algebras.at(ref))) {
            fail(r, "diagrams", name, "modules are not over the referenced algebra");
            continue;
        }
        if (s.rows() == 0) s = Matrix(0, ms->dim());
        try {
            DiagramEntry entry{ref, make_diagram(*ms, *mt, std::move(s), kind), {}};
            std::string bad;
            for (auto& [lname, lam] : raw_lambdas) {
                const LeftModule* m = find_left(f, lam.first);
                if (!m || !(m->algebra() == ms->algebra())) {
                    bad = "lambda '" + lname + "': unresolved module or different algebra";
                    break;
                }
                const LeftModule& from = kind == DiagramKind::mono ? *ms : *m;
                const LeftModule& to = kind == DiagramKind::mono ? *m : *mt;
                if (lam.second.rows() == 0) lam.second = Matrix(0, from.dim());
                if (lam.second.rows() != to.dim() || lam.second.cols() != from.dim()) {
                    bad = "lambda '" + lname + "': wrong shape";
                    break;
                }
                if (!intertwines(from, to, lam.second)) {
                    bad = "lambda '" + lname + "': not a module map";
                    break;
                }
                entry.lambdas.emplace(lname, LambdaEntry{lam.first, lam.second});
            }
            if (!bad.empty()) {
                fail(r, "diagrams", name, bad);
                continue;
            }
            f.diagrams.emplace(name, std::move(entry));
            pass(r, "diagrams", name);
        } catch (const ValidationError& e) {
            fail(r, "diagrams", name, e.what());
        }
    }
    return r;
}

LoadResult load_instance_text(const std::string& text)
{
    std::string trimmed = text;
    if (trimmed.find_first_not_of(" \t\r\n") == std::string::npos) return {};
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return load_instance(doc);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    }
}

LoadResult load_instance_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_instance_text(ss.str());
}

InstanceFile require_valid(const LoadResult& r)
{
    for (const auto& c : r.checks)
        if (!c.ok) throw ValidationError(c.section + " '" + c.name + "': " + c.message);
    return r.instance;
}

} // namespace tlau
