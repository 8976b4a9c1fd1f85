#pragma once

#include "tlau/bimodule.hpp"
#include "tlau/hochschild.hpp"
#include "tlau/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlau {

enum class OutputFormat { text, json };

OutputFormat parse_format(const std::string& text);

struct RunConfig {
    LauVariant variant = LauVariant::standard;
    std::size_t n = 1;
    std::size_t cap = default_size_cap;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::text;
};

/// Exit codes: 0 everything holds, 1 a check or validation failed, 2 usage or parse error.
struct CommandOutput {
    Json report;
    int exit_code = 0;
};

CommandOutput cmd_check(const std::string& file);

/// Emits the product algebra as an instance-file section.
CommandOutput cmd_lau(const std::string& file, const std::string& hom, const std::string& name);

/// `module` may be "regular" for the regular bimodule of `algebra`.
CommandOutput cmd_hochschild(const std::string& file, const std::optional<std::string>& algebra,
                             const std::string& module, const RunConfig& cfg);

/// Without `hom`, runs every hom of the file against every module over its target, plus the regular module.
/// `module` may be a bimodule over A (induced per the variant), over an algebra equal to the product,
/// or "regular" for the regular bimodule of the product.
CommandOutput cmd_verify(const std::string& file, const std::optional<std::string>& hom,
                         const std::optional<std::string>& module, const RunConfig& cfg);

/// Exactly one of `algebra` and `hom`; with neither, runs every algebra and every hom.
CommandOutput cmd_multiplier(const std::string& file, const std::optional<std::string>& algebra,
                             const std::optional<std::string>& hom);

/// Without `lambda`, solves every lambda of the diagram.
CommandOutput cmd_lift(const std::string& file, const std::string& diagram, const std::optional<std::string>& lambda);

/// Deterministic instance file with `count` Lau instances of dimensions (dims[0], dims[1]).
CommandOutput cmd_random(std::uint64_t seed, const std::vector<std::size_t>& dims, std::size_t count);

std::string render(const Json& report, OutputFormat format);

} // namespace tlau
