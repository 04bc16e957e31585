#include "formacheck/pipeline.hpp"

#include "formacheck/errors.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

namespace formacheck {

CheckResult run_pipeline(const GradedAlgebra& h, std::optional<int> cap, unsigned threads)
{
    CheckResult r{h, validate(h), cap.value_or(default_cap(h)), {}, {}, {}, {}, {}, {}};
    if (!r.validation.ok())
        throw InputError("validation failed: " + r.validation.first_failure());
    if (r.cap < h.top_degree())
        throw InputError("cap " + std::to_string(r.cap) + " is below the top degree " + std::to_string(h.top_degree()));

    r.generators = choose_generators(h);
    if (r.validation.odd_vanishing) {
        r.e = compute_E(h, r.generators);
        r.goods = good_objects(h, r.generators);
        r.model = build_model(r.generators, r.goods);
        r.quasi = verify_quasi_iso(*r.model, h, r.cap, threads);
    }
    r.verdict = render_verdict(h, r.validation, r.e ? &*r.e : nullptr, r.quasi ? &*r.quasi : nullptr);
    return r;
}

namespace {

Json check_json(const ValidationCheck& c)
{
    Json j{{"passed", c.passed}};
    if (!c.passed)
        j["detail"] = c.detail;
    return j;
}

Json flags_json(const std::vector<bool>& flags)
{
    Json a = Json::array();
    for (bool b : flags)
        a.push_back(b);
    return a;
}

std::vector<std::string> generator_labels(const GeneratorSet& gens)
{
    std::vector<std::string> labels;
    for (const auto& g : gens.generators)
        labels.push_back(g.label);
    return labels;
}

} // namespace

Json model_to_json(const Model& model)
{
    Json gens = Json::array();
    for (const auto& g : model.even_generators().generators)
        gens.push_back(Json{{"label", g.label}, {"degree", g.degree}, {"d", "0"}});
    for (const auto& w : model.odd_generators())
        gens.push_back(
            Json{{"label", w.label}, {"degree", w.degree}, {"d", Json{{"monomial", model.format(w.target)}, {"coeff", "1"}}}});
    return Json{{"generators", std::move(gens)}};
}

Json make_certificate(const CheckResult& r, const std::string& timestamp)
{
    const auto& h = r.algebra;
    const auto labels = generator_labels(r.generators);

    Json cert;
    cert["tool"] = "formacheck";
    cert["version"] = tool_version;
    cert["generated_at"] = timestamp;

    const Json echo = algebra_to_json(h);
    cert["input"] = Json{{"name", h.name()}, {"sha256", sha256_hex(echo.dump())}, {"algebra", echo}};

    cert["validation"] = Json{
        {"single_unit", check_json(r.validation.single_unit)},
        {"graded_multiplicativity", check_json(r.validation.graded_multiplicativity)},
        {"unit_law", check_json(r.validation.unit_law)},
        {"associativity", check_json(r.validation.associativity)},
        {"commutativity", check_json(r.validation.commutativity)},
        {"finite_dimension", check_json(r.validation.finite_dimension)},
        {"odd_degree_vanishing", r.validation.odd_vanishing},
    };
    cert["cap"] = r.cap;

    Json gens = Json::array();
    for (const auto& g : r.generators.generators)
        gens.push_back(Json{{"label", g.label}, {"degree", g.degree}, {"class", element_to_json(h, g.class_vector)}});
    cert["generators"] = std::move(gens);

    if (r.e) {
        Json e = Json::array();
        for (const auto& entry : r.e->entries)
            e.push_back(Json{{"monomial", format_monomial(entry.monomial, labels)},
                             {"degree", entry.monomial.degree},
                             {"class", element_to_json(h, entry.image.coeffs)}});
        cert["E"] = std::move(e);
    } else {
        cert["E"] = nullptr;
    }

    if (r.model) {
        Json goods = Json::array();
        for (const auto& g : r.goods) {
            Json divisors = Json::array();
            for (const auto& [d, image] : g.divisor_images)
                divisors.push_back(Json{{"monomial", format_monomial(d, labels)}, {"image", element_to_json(h, image.coeffs)}});
            goods.push_back(Json{{"monomial", format_monomial(g.monomial, labels)},
                                 {"degree", g.monomial.degree},
                                 {"image", element_to_json(h, g.image.coeffs)},
                                 {"divisors", std::move(divisors)}});
        }
        cert["good_objects"] = std::move(goods);
        cert["model"] = model_to_json(*r.model);
    } else {
        cert["good_objects"] = nullptr;
        cert["model"] = nullptr;
    }

    if (r.quasi) {
        Json degrees = Json::array();
        for (const auto& d : r.quasi->degrees)
            degrees.push_back(Json{{"degree", d.degree},
                                   {"model_cohomology_dim", d.model_cohomology_dim},
                                   {"target_dim", d.target_dim},
                                   {"induced_map_rank", d.induced_map_rank},
                                   {"injective", d.injective},
                                   {"surjective", d.surjective},
                                   {"status", std::string(to_string(d.status()))}});
        cert["quasi_isomorphism"] = Json{
            {"verified_up_to_degree", r.quasi->cap},
            {"all_bijective", r.quasi->all_bijective},
            {"first_failure", r.quasi->first_failure ? Json(*r.quasi->first_failure) : Json(nullptr)},
            {"degrees", std::move(degrees)},
        };
    } else {
        cert["quasi_isomorphism"] = nullptr;
    }

    const auto& v = r.verdict;
    cert["corollary"] = Json{
        {"degrees", v.degrees.degrees},
        {"integer_flags", flags_json(v.corollary_integer)},
        {"nonnegative_flags", flags_json(v.corollary_nonnegative)},
        {"holds", v.corollary_holds},
    };
    cert["verdict"] = Json{
        {"hypothesis_ok", v.hypothesis_ok},
        {"condition_i", v.condition_i},
        {"condition_ii", v.condition_ii},
        {"classification", std::string(to_string(v.classification))},
        {"discrepancy", v.discrepancy},
        {"discrepancy_degree", v.discrepancy_degree ? Json(*v.discrepancy_degree) : Json(nullptr)},
        {"exit_code", v.exit_code()},
    };
    return cert;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int run_check(const std::filesystem::path& path, const CheckOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        const auto h = parse_algebra(path);
        const auto result = run_pipeline(h, options.cap, options.threads);
        const auto cert = make_certificate(result, utc_timestamp());

        if (options.emit_model && result.model)
            write_text_file(*options.emit_model, model_to_json(*result.model).dump(2) + "\n");

        if (options.report) {
            write_text_file(*options.report, cert.dump(2) + "\n");
            const auto& v = result.verdict;
            out << h.name() << ": " << to_string(v.classification);
            if (v.classification == Classification::formal_by_theorem)
                out << " (condition " << (v.condition_i ? "i" : "ii") << ")";
            if (result.quasi) {
                if (result.quasi->all_bijective)
                    out << "; H(phi~) bijective in degrees 0.." << result.cap;
                else
                    out << "; H(phi~) fails at degree " << *result.quasi->first_failure;
            }
            if (v.discrepancy)
                out << "; DISCREPANCY";
            out << "\n";
        } else {
            out << cert.dump(2) << "\n";
        }
        return result.verdict.exit_code();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace formacheck
