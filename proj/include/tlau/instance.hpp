#pragma once

#include "tlau/bimodule.hpp"
#include "tlau/homlift.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tlau {

using Json = nlohmann::json;

struct LambdaEntry {
    std::string module;
    Matrix matrix;
};

/// Diagram section: S between two named left modules, plus named maps into or out of further modules.
struct DiagramEntry {
    std::string algebra_ref;
    Diagram diagram;
    std::map<std::string, LambdaEntry> lambdas;
};

struct ModuleEntry {
    std::string algebra_ref;
    std::variant<Bimodule, LeftModule> module;

    bool is_bimodule() const { return std::holds_alternative<Bimodule>(module); }
};

struct HomEntry {
    std::string source;
    std::string target;
    AlgebraHom hom;
};

struct InstanceFile {
    std::map<std::string, FiniteAlgebra> algebras;
    std::map<std::string, HomEntry> homs;
    std::map<std::string, ModuleEntry> modules;
    std::map<std::string, DiagramEntry> diagrams;
};

/// Outcome of validating one named section.
struct CheckEntry {
    std::string section; // "algebras", "homs", "modules" or "diagrams"
    std::string name;
    bool ok = true;
    std::string message;
    Json witness;
};

struct LoadResult {
    InstanceFile instance;
    std::vector<CheckEntry> checks;

    bool all_ok() const;
};

Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);
/// Array of rows.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Tensor3 tensor_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2);
Json tensor_to_json(const Tensor3& t);

Json algebra_to_json(const FiniteAlgebra& a);
Json hom_to_json(const std::string& source, const std::string& target, const Matrix& m);
Json module_to_json(const std::string& algebra_ref, const Bimodule& e);
Json module_to_json(const std::string& algebra_ref, const LeftModule& m);

/// Validates every section; invalid objects are reported and left out, dependents fail as unresolved.
/// Throws ParseError for malformed JSON structure.
LoadResult load_instance(const Json& doc);
LoadResult load_instance_text(const std::string& text);
LoadResult load_instance_file(const std::string& path);

/// Throws ValidationError unless every object validated.
InstanceFile require_valid(const LoadResult& r);

} // namespace tlau
