#include "formacheck/corpus.hpp"
#include "formacheck/errors.hpp"
#include "formacheck/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace formacheck;

namespace {

py::dict element_dict(const GradedAlgebra& h, const VecQ& coeffs)
{
    py::dict d;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k]))
            d[py::str(h.basis()[k].label)] = to_string(coeffs[k]);
    return d;
}

std::vector<std::vector<std::string>> matrix_strings(const MatQ& m)
{
    std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = to_string(m(r, c));
    return rows;
}

MatQ matrix_from_strings(const std::vector<std::vector<std::string>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    MatQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = parse_rational(rows[r][c]);
    }
    return m;
}

std::vector<std::string> labels_of(const GeneratorSet& gens)
{
    std::vector<std::string> labels;
    for (const auto& g : gens.generators)
        labels.push_back(g.label);
    return labels;
}

py::dict report_dict(const DegreeReport& d)
{
    py::dict r;
    r["degree"] = d.degree;
    r["model_cohomology_dim"] = d.model_cohomology_dim;
    r["target_dim"] = d.target_dim;
    r["induced_map_rank"] = d.induced_map_rank;
    r["injective"] = d.injective;
    r["surjective"] = d.surjective;
    r["status"] = std::string(to_string(d.status()));
    return r;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Formality checks for finite-dimensional graded commutative algebras over Q";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<GradedAlgebra>(m, "GradedAlgebra")
        .def_property_readonly("name", &GradedAlgebra::name)
        .def_property_readonly("dim", &GradedAlgebra::dim)
        .def_property_readonly("top_degree", &GradedAlgebra::top_degree)
        .def_property_readonly("labels",
                               [](const GradedAlgebra& h) {
                                   std::vector<std::string> out;
                                   for (const auto& b : h.basis())
                                       out.push_back(b.label);
                                   return out;
                               })
        .def_property_readonly("degrees",
                               [](const GradedAlgebra& h) {
                                   std::vector<int> out;
                                   for (const auto& b : h.basis())
                                       out.push_back(b.degree);
                                   return out;
                               })
        .def("to_json", [](const GradedAlgebra& h) { return algebra_to_json(h).dump(); })
        .def("__repr__", [](const GradedAlgebra& h) {
            return "<GradedAlgebra '" + h.name() + "' dim=" + std::to_string(h.dim()) + ">";
        });

    py::class_<Model>(m, "Model")
        .def_property_readonly("labels", [](const Model& md) {
            return std::vector<std::string>(md.labels().begin(), md.labels().end());
        })
        .def_property_readonly("degrees", [](const Model& md) {
            return std::vector<int>(md.degrees().begin(), md.degrees().end());
        })
        .def("to_json", [](const Model& md) { return model_to_json(md).dump(); })
        .def("monomials_of_degree",
             [](const Model& md, int n) {
                 std::vector<std::string> out;
                 for (const auto& mono : monomials_of_degree(md, n))
                     out.push_back(md.format(mono));
                 return out;
             })
        .def("differential_matrix", [](const Model& md, int n) { return matrix_strings(differential_matrix(md, n)); })
        .def("cohomology_dim", [](const Model& md, int n) { return cohomology_basis(md, n).dim; });

    m.def("parse_algebra", &parse_algebra_text, py::arg("text"), "Parse and validate an algebra from JSON text");
    m.def("load_algebra", [](const std::filesystem::path& p) { return parse_algebra(p); }, py::arg("path"));

    m.def("validate", [](const GradedAlgebra& h) {
        const auto v = validate(h);
        py::dict d;
        d["ok"] = v.ok();
        d["failure"] = v.first_failure();
        d["associativity"] = v.associativity.passed;
        d["commutativity"] = v.commutativity.passed;
        d["graded_multiplicativity"] = v.graded_multiplicativity.passed;
        d["unit_law"] = v.unit_law.passed;
        d["single_unit"] = v.single_unit.passed;
        d["odd_vanishing"] = v.odd_vanishing;
        return d;
    });

    m.def("choose_generators", [](const GradedAlgebra& h) {
        py::list out;
        for (const auto& g : choose_generators(h).generators) {
            py::dict d;
            d["label"] = g.label;
            d["degree"] = g.degree;
            d["class"] = element_dict(h, g.class_vector);
            out.append(d);
        }
        return out;
    });

    m.def("compute_E", [](const GradedAlgebra& h) {
        const auto gens = choose_generators(h);
        const auto labels = labels_of(gens);
        py::list out;
        for (const auto& e : compute_E(h, gens).entries)
            out.append(py::make_tuple(format_monomial(e.monomial, labels), element_dict(h, e.image.coeffs)));
        return out;
    });

    m.def("good_objects", [](const GradedAlgebra& h) {
        const auto gens = choose_generators(h);
        const auto labels = labels_of(gens);
        std::vector<std::string> out;
        for (const auto& g : good_objects(h, gens))
            out.push_back(format_monomial(g.monomial, labels));
        return out;
    });

    m.def("build_model", [](const GradedAlgebra& h) { return build_model(h, choose_generators(h)); });

    m.def(
        "verify_quasi_iso",
        [](const Model& md, const GradedAlgebra& h, std::optional<int> cap) {
            const auto r = verify_quasi_iso(md, h, cap.value_or(default_cap(h)));
            py::dict d;
            d["cap"] = r.cap;
            d["all_bijective"] = r.all_bijective;
            d["first_failure"] = r.first_failure ? py::object(py::int_(*r.first_failure)) : py::object(py::none());
            py::list degrees;
            for (const auto& rep : r.degrees)
                degrees.append(report_dict(rep));
            d["degrees"] = degrees;
            return d;
        },
        py::arg("model"), py::arg("algebra"), py::arg("cap") = py::none());

    m.def(
        "check",
        [](const GradedAlgebra& h, std::optional<int> cap) {
            const auto r = run_pipeline(h, cap);
            return make_certificate(r, utc_timestamp()).dump();
        },
        py::arg("algebra"), py::arg("cap") = py::none(), "Run the full pipeline; returns the certificate JSON text");

    m.def("corollary_integer_check", [](const std::vector<int>& f) { return corollary_integer_check(f); });
    m.def("corollary_nonnegative_check", [](const std::vector<int>& f) { return corollary_nonnegative_check(f); });

    m.def("duality_check", [](const std::string& text) {
        const auto c = chain_complex_from_json(nlohmann::json::parse(text));
        py::list out;
        for (const auto& row : duality_check(c)) {
            py::dict d;
            d["degree"] = row.degree;
            d["homology_dim"] = row.homology_dim;
            d["dual_cohomology_dim"] = row.dual_cohomology_dim;
            d["equal"] = row.equal;
            out.append(d);
        }
        return out;
    });

    m.def("rank", [](const std::vector<std::vector<std::string>>& rows) { return rank(matrix_from_strings(rows)); });
    m.def("kernel_basis", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : kernel_basis(matrix_from_strings(rows))) {
            std::vector<std::string> s;
            for (const auto& x : v)
                s.push_back(to_string(x));
            out.push_back(std::move(s));
        }
        return out;
    });

    auto c = m.def_submodule("corpus", "Corpus algebra generators");
    c.def("even_sphere", &corpus::even_sphere, py::arg("n"));
    c.def("truncated_poly", &corpus::truncated_poly, py::arg("degree"), py::arg("height"));
    c.def("product", &corpus::product);
    c.def("wedge", &corpus::wedge);

    m.attr("__version__") = tool_version;
}
