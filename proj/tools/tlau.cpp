#include "tlau/commands.hpp"
#include "tlau/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

std::vector<std::size_t> parse_dims(const std::string& text)
{
    std::vector<std::size_t> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw tlau::ParseError("dims must look like '2,1'");
        dims.push_back(std::stoul(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return dims;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lau product algebras: Hochschild cohomology, multipliers and module lifts over Q(i)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string variant = "standard", format = "text", out_path;
    std::size_t n = 1, cap = tlau::default_size_cap;
    std::uint64_t seed = 0;
    app.add_option("--variant", variant, "standard or as_printed")->capture_default_str();
    app.add_option("--n", n, "cohomology degree")->capture_default_str();
    app.add_option("--cap", cap, "largest coboundary side")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--format", format, "text or json")->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "instance file")->required(); };

    auto* check = app.add_subcommand("check", "validate every object of an instance file");
    add_file(check);

    std::string hom, name = "product";
    auto* lau = app.add_subcommand("lau", "build A x_T B from a hom T : B -> A");
    add_file(lau);
    lau->add_option("--hom", hom, "hom name")->required();
    lau->add_option("--name", name, "name of the emitted algebra")->capture_default_str();

    std::string module, algebra;
    auto* hoch = app.add_subcommand("hochschild", "cohomology of an algebra with bimodule coefficients");
    add_file(hoch);
    hoch->add_option("--module", module, "bimodule name, or 'regular'")->required();
    hoch->add_option("--algebra", algebra, "algebra name");

    auto* vh1 = app.add_subcommand("verify-h1", "compare H^1 of A x_T B with H^1 of A and B");
    auto* vhn = app.add_subcommand("verify-hn", "compare H^n of A x_T B with H^n of A and B");
    for (auto* sub : {vh1, vhn}) {
        add_file(sub);
        sub->add_option("--hom", hom, "hom name; all homs when omitted");
        sub->add_option("--module", module, "bimodule name or 'regular'; all when omitted");
    }

    auto* mult = app.add_subcommand("multiplier", "double-centralizer algebra and the product split");
    add_file(mult);
    mult->add_option("--algebra", algebra, "algebra name");
    mult->add_option("--hom", hom, "hom name");

    std::string diagram, lambda;
    auto* lift = app.add_subcommand("lift", "solve a lifting problem of a diagram");
    add_file(lift);
    lift->add_option("--diagram", diagram, "diagram name")->required();
    lift->add_option("--lambda", lambda, "lambda name; all when omitted");

    std::string dims_text = "2,1";
    std::size_t count = 1;
    auto* random = app.add_subcommand("random", "generate a deterministic instance file");
    random->add_option("--dims", dims_text, "dimA,dimB")->capture_default_str();
    random->add_option("--count", count, "number of instances")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
    try {
        tlau::RunConfig cfg;
        cfg.variant = tlau::parse_variant(variant);
        cfg.n = n;
        cfg.cap = cap;
        cfg.seed = seed;
        cfg.format = tlau::parse_format(format);

        tlau::CommandOutput result;
        if (check->parsed())
            result = tlau::cmd_check(file);
        else if (lau->parsed())
            result = tlau::cmd_lau(file, hom, name);
        else if (hoch->parsed())
            result = tlau::cmd_hochschild(file, opt(algebra), module, cfg);
        else if (vh1->parsed() || vhn->parsed()) {
            if (vh1->parsed()) cfg.n = 1;
            result = tlau::cmd_verify(file, opt(hom), opt(module), cfg);
        } else if (mult->parsed())
            result = tlau::cmd_multiplier(file, opt(algebra), opt(hom));
        else if (lift->parsed())
            result = tlau::cmd_lift(file, diagram, opt(lambda));
        else
            result = tlau::cmd_random(seed, parse_dims(dims_text), count);

        std::string text = tlau::render(result.report, cfg.format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw tlau::ParseError("cannot write '" + out_path + "'");
            out << text;
        }
        return result.exit_code;
    } catch (const tlau::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tlau::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
