#include "formacheck/io.hpp"

#include "formacheck/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace formacheck {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw InputError(where + ": " + what);
}

const nlohmann::json& require(const nlohmann::json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object())
        fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const nlohmann::json& obj, const char* key, const std::string& where)
{
    const auto& v = require(obj, key, where);
    if (!v.is_string())
        fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

long long require_integer(const nlohmann::json& v, const std::string& where)
{
    if (!v.is_number_integer())
        fail(where, "expected an integer");
    return v.get<long long>();
}

Rat require_rational(const nlohmann::json& v, const std::string& where)
{
    if (!v.is_string())
        fail(where, "expected a rational string \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

nlohmann::json parse_json(std::string_view text, const std::string& source)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

bool all_zero(const VecQ& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_zero(x); });
}

} // namespace

GradedAlgebra algebra_from_json(const nlohmann::json& doc)
{
    const std::string root = "$";
    if (!doc.is_object())
        fail(root, "expected an object");

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            fail("$.name", "expected a string");
        name = it->get<std::string>();
    }

    const auto& basis_json = require(doc, "basis", root);
    if (!basis_json.is_array() || basis_json.empty())
        fail("$.basis", "expected a nonempty array");

    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis_json.size(); ++i) {
        const auto where = at("$.basis", i);
        BasisElement b;
        b.label = require_string(basis_json[i], "label", where);
        const auto degree = require_integer(require(basis_json[i], "degree", where), where + ".degree");
        if (degree < 0)
            fail(where + ".degree", "negative degree");
        b.degree = static_cast<int>(degree);
        if (!index.emplace(b.label, i).second)
            fail(where + ".label", "duplicate label '" + b.label + "'");
        basis.push_back(std::move(b));
    }

    if (!doc.contains("unit"))
        fail(root, "missing unit");
    const auto unit_label = require_string(doc, "unit", root);
    const auto unit_it = index.find(unit_label);
    if (unit_it == index.end())
        fail("$.unit", "unknown label '" + unit_label + "'");
    const std::size_t unit = unit_it->second;
    if (basis[unit].degree != 0)
        fail("$.unit", "unit '" + unit_label + "' must have degree 0");

    auto lookup = [&](const std::string& label, const std::string& where) {
        auto it = index.find(label);
        if (it == index.end())
            fail(where, "unknown label '" + label + "'");
        return it->second;
    };

    ProductTable table;
    if (auto it = doc.find("products"); it != doc.end()) {
        if (!it->is_array())
            fail("$.products", "expected an array");
        for (std::size_t p = 0; p < it->size(); ++p) {
            const auto where = at("$.products", p);
            const auto& entry = (*it)[p];
            const auto left = lookup(require_string(entry, "left", where), where + ".left");
            const auto right = lookup(require_string(entry, "right", where), where + ".right");
            if (left > right)
                fail(where, "left '" + basis[left].label + "' comes after right '" + basis[right].label +
                                "' in basis order; list each product with left <= right");

            const auto& value_json = require(entry, "value", where);
            if (!value_json.is_array())
                fail(where + ".value", "expected an array");
            VecQ value(basis.size());
            std::set<std::size_t> seen;
            for (std::size_t t = 0; t < value_json.size(); ++t) {
                const auto term = at(where + ".value", t);
                const auto k = lookup(require_string(value_json[t], "label", term), term + ".label");
                if (!seen.insert(k).second)
                    fail(term + ".label", "label '" + basis[k].label + "' repeated within one product");
                value[k] = require_rational(require(value_json[t], "coeff", term), term + ".coeff");
            }

            if (!table.emplace(std::pair{left, right}, value).second)
                fail(where, "duplicate product " + basis[left].label + "*" + basis[right].label);
        }
    }

    // normal form: drop zero products and unit products that equal the unit law
    for (auto it = table.begin(); it != table.end();) {
        const auto [i, j] = it->first;
        bool redundant = all_zero(it->second) && i != unit && j != unit;
        if (i == unit || j == unit) {
            VecQ law(basis.size());
            law[i == unit ? j : i] = 1;
            redundant = it->second == law;
        }
        it = redundant ? table.erase(it) : std::next(it);
    }

    return GradedAlgebra(std::move(name), std::move(basis), unit, std::move(table));
}

GradedAlgebra parse_algebra_text(std::string_view text)
{
    auto h = algebra_from_json(parse_json(text, "algebra"));
    const auto report = validate(h);
    if (!report.ok())
        throw InputError("validation failed: " + report.first_failure());
    return h;
}

GradedAlgebra parse_algebra(const std::filesystem::path& path)
{
    const auto text = read_text_file(path);
    try {
        return parse_algebra_text(text);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json element_to_json(const GradedAlgebra& h, const VecQ& coeffs)
{
    Json obj = Json::object();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k]))
            obj[h.basis()[k].label] = to_string(coeffs[k]);
    return obj;
}

Json algebra_to_json(const GradedAlgebra& h)
{
    Json doc;
    doc["name"] = h.name();
    doc["basis"] = Json::array();
    for (const auto& b : h.basis())
        doc["basis"].push_back(Json{{"label", b.label}, {"degree", b.degree}});
    doc["unit"] = h.basis()[h.unit_index()].label;
    doc["products"] = Json::array();
    for (const auto& [key, value] : h.table()) {
        Json terms = Json::array();
        for (std::size_t k = 0; k < value.size(); ++k)
            if (!is_zero(value[k]))
                terms.push_back(Json{{"label", h.basis()[k].label}, {"coeff", to_string(value[k])}});
        if (terms.empty() && key.first != h.unit_index() && key.second != h.unit_index())
            continue;
        doc["products"].push_back(
            Json{{"left", h.basis()[key.first].label}, {"right", h.basis()[key.second].label}, {"value", terms}});
    }
    return doc;
}

ChainComplexQ chain_complex_from_json(const nlohmann::json& doc)
{
    const auto& dims_json = require(doc, "dims", "$");
    if (!dims_json.is_array() || dims_json.empty())
        fail("$.dims", "expected a nonempty array");
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n < dims_json.size(); ++n) {
        const auto d = require_integer(dims_json[n], at("$.dims", n));
        if (d < 0)
            fail(at("$.dims", n), "negative dimension");
        dims.push_back(static_cast<std::size_t>(d));
    }

    std::vector<MatQ> boundaries;
    for (std::size_t n = 1; n < dims.size(); ++n)
        boundaries.emplace_back(dims[n - 1], dims[n]);

    if (auto it = doc.find("boundaries"); it != doc.end()) {
        if (!it->is_object())
            fail("$.boundaries", "expected an object keyed by degree");
        for (const auto& [key, rows] : it->items()) {
            const auto where = "$.boundaries." + key;
            std::size_t n = 0;
            try {
                std::size_t used = 0;
                n = std::stoul(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail(where, "degree key must be a nonnegative integer");
            }
            if (n == 0 || n >= dims.size())
                fail(where, "no boundary map out of degree " + key);
            auto& m = boundaries[n - 1];
            if (!rows.is_array() || rows.size() != m.rows())
                fail(where, "expected " + std::to_string(m.rows()) + " rows");
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != m.cols())
                    fail(at(where, r), "expected " + std::to_string(m.cols()) + " entries");
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m(r, c) = require_rational(rows[r][c], at(at(where, r), c));
            }
        }
    }
    return ChainComplexQ(std::move(dims), std::move(boundaries));
}

ChainComplexQ parse_chain_complex(const std::filesystem::path& path)
{
    try {
        return chain_complex_from_json(parse_json(read_text_file(path), "chain complex"));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json chain_complex_to_json(const ChainComplexQ& c)
{
    Json doc;
    doc["dims"] = Json(std::vector<std::size_t>(c.dims().begin(), c.dims().end()));
    doc["boundaries"] = Json::object();
    for (std::size_t n = 1; n <= c.top(); ++n) {
        const auto m = c.boundary(n);
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t col = 0; col < m.cols(); ++col)
                row.push_back(to_string(m(r, col)));
            rows.push_back(std::move(row));
        }
        doc["boundaries"][std::to_string(n)] = std::move(rows);
    }
    return doc;
}

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path.string() + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError(path.string() + ": cannot write file");
    out << text;
}

} // namespace formacheck
