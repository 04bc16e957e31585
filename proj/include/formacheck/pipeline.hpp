#pragma once

#include "formacheck/formality.hpp"
#include "formacheck/io.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace formacheck {

inline constexpr const char* tool_version = "0.1.0";

/// Everything one `check` run computes. The model-side fields are empty
/// when the algebra has odd-degree classes.
struct CheckResult {
    GradedAlgebra algebra;
    ValidationReport validation;
    int cap = 0;
    GeneratorSet generators;
    std::optional<EFamily> e;
    std::vector<GoodObject> goods;
    std::optional<Model> model;
    std::optional<QuasiIsoReport> quasi;
    Verdict verdict;
};

/// validate -> choose_generators -> compute_E -> good_objects -> build_model
/// -> verify_quasi_iso -> render_verdict. Throws InputError when an
/// algebra axiom fails or the cap is below the top degree.
CheckResult run_pipeline(const GradedAlgebra& h, std::optional<int> cap = std::nullopt, unsigned threads = 0);

Json model_to_json(const Model& model);

/// Certificate document. `timestamp` fills the "generated_at" field, the
/// only part that differs between runs on the same input.
Json make_certificate(const CheckResult& result, const std::string& timestamp);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

struct CheckOptions {
    std::optional<int> cap;
    std::optional<std::filesystem::path> report;     // certificate destination, stdout when absent
    std::optional<std::filesystem::path> emit_model; // model-only JSON
    unsigned threads = 0;
};

/// The `check` subcommand. Returns the process exit status: 0 formal with
/// a clean quasi-isomorphism check, 2 inconclusive, 3 hypothesis violated,
/// 4 discrepancy, 1 input error.
int run_check(const std::filesystem::path& path, const CheckOptions& options, std::ostream& out, std::ostream& err);

} // namespace formacheck
