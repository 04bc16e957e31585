#include "formacheck/corpus.hpp"
#include "formacheck/errors.hpp"
#include "formacheck/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace formacheck;

namespace {

int to_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(what) + " must be an integer, got '" + s + "'");
}

GradedAlgebra make_corpus(const std::string& kind, const std::vector<std::string>& params)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw InputError("corpus " + kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "even_sphere") {
        need(1);
        return corpus::even_sphere(to_int(params[0], "n"));
    }
    if (kind == "truncated_poly") {
        need(2);
        return corpus::truncated_poly(to_int(params[0], "degree"), to_int(params[1], "height"));
    }
    if (kind == "product") {
        need(2);
        return corpus::product(parse_algebra(params[0]), parse_algebra(params[1]));
    }
    if (kind == "wedge") {
        need(2);
        return corpus::wedge(parse_algebra(params[0]), parse_algebra(params[1]));
    }
    throw InputError("unknown corpus kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Formality checker for finite-dimensional graded commutative algebras over Q"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string check_file;
    std::optional<int> cap;
    std::string report, emit_model;
    auto* check = app.add_subcommand("check", "Run the formality pipeline and emit a certificate");
    check->add_option("file", check_file, "Algebra JSON file")->required();
    check->add_option("--cap", cap, "Verify H(phi~) up to this degree (default 2*top+1)");
    check->add_option("--report", report, "Write the certificate here instead of stdout");
    check->add_option("--emit-model", emit_model, "Write the model (generators and differentials) here");

    std::string kind, output;
    std::vector<std::string> params;
    auto* corpus_cmd = app.add_subcommand("corpus", "Generate a corpus algebra file");
    corpus_cmd->add_option("kind", kind, "even_sphere | truncated_poly | product | wedge")->required();
    corpus_cmd->add_option("params", params, "n | degree height | a.json b.json");
    corpus_cmd->add_option("-o,--output", output, "Output file")->required();

    std::string duality_file;
    auto* duality = app.add_subcommand("duality", "Compare homology with dual cohomology of a chain complex");
    duality->add_option("file", duality_file, "Chain complex JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*check) {
        CheckOptions options;
        options.cap = cap;
        if (!report.empty())
            options.report = report;
        if (!emit_model.empty())
            options.emit_model = emit_model;
        return run_check(check_file, options, std::cout, std::cerr);
    }

    try {
        if (*corpus_cmd) {
            const auto h = make_corpus(kind, params);
            const auto v = validate(h);
            if (!v.ok())
                throw InputError("generated algebra fails validation: " + v.first_failure());
            write_text_file(output, algebra_to_json(h).dump(2) + "\n");
            return 0;
        }
        if (*duality) {
            const auto rows = duality_check(parse_chain_complex(duality_file));
            Json out = Json::array();
            bool all_equal = true;
            for (const auto& r : rows) {
                out.push_back(Json{{"degree", r.degree},
                                   {"homology_dim", r.homology_dim},
                                   {"dual_cohomology_dim", r.dual_cohomology_dim},
                                   {"equal", r.equal}});
                all_equal = all_equal && r.equal;
            }
            std::cout << out.dump(2) << "\n";
            return all_equal ? 0 : 4;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
