// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "formacheck/cohomology.hpp"
#include "formacheck/corpus.hpp"
#include "formacheck/formality.hpp"
#include "formacheck/io.hpp"
#include "formacheck/pipeline.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace formacheck;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail)
{
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt_time(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

std::vector<std::string> labels_of(const GeneratorSet& g)
{
    std::vector<std::string> out;
    for (const auto& v : g.generators)
        out.push_back(v.label);
    return out;
}

std::vector<std::string> formatted(const std::vector<Monomial>& ms, const GeneratorSet& g)
{
    const auto labels = labels_of(g);
    std::vector<std::string> out;
    for (const auto& m : ms)
        out.push_back(format_monomial(m, labels));
    return out;
}

bool dims_match_target(const QuasiIsoReport& q, const GradedAlgebra& h)
{
    for (const auto& d : q.degrees)
        if (d.model_cohomology_dim != h.indices_of_degree(d.degree).size() || !d.bijective())
            return false;
    return q.all_bijective;
}

void sphere()
{
    const auto t0 = Clock::now();
    const auto h = corpus::even_sphere(2);
    const auto g = choose_generators(h);
    const auto goods = good_objects(h, g);
    std::vector<Monomial> gm;
    for (const auto& o : goods)
        gm.push_back(o.monomial);
    const auto model = build_model(g, goods);
    const auto q = verify_quasi_iso(model, h, 12);
    const double t = seconds_since(t0);

    bool ok = g.size() == 1 && g[0].degree == 2;
    ok = ok && formatted(gm, g) == std::vector<std::string>{"x^2"};
    ok = ok && model.odd_generators().size() == 1 && model.odd_generators()[0].degree == 3 &&
         model.odd_generators()[0].target == gm[0];
    std::vector<std::size_t> dims;
    for (const auto& d : q.degrees)
        dims.push_back(d.model_cohomology_dim);
    std::vector<std::size_t> expected(13, 0);
    expected[0] = expected[2] = 1;
    ok = ok && dims == expected && q.all_bijective && t < 5.0;
    report(1, ok, "S^2: generators {x:2}, goods {x^2}, model (x_2, w_3; dw = x^2), H dims 1,0,1,0.. to 12, " +
                      fmt_time(t) + " < 5s");
}

void projective_spaces()
{
    bool ok = true;
    std::string detail;
    for (int height : {3, 4}) {
        const auto t0 = Clock::now();
        const auto h = corpus::truncated_poly(2, height);
        const auto g = choose_generators(h);
        const auto e = compute_E(h, g);
        std::vector<Monomial> em, gm;
        for (const auto& x : e.entries)
            em.push_back(x.monomial);
        const auto goods = good_objects(h, g);
        for (const auto& o : goods)
            gm.push_back(o.monomial);
        const auto model = build_model(g, goods);
        const auto q = verify_quasi_iso(model, h, 12);
        const double t = seconds_since(t0);

        std::vector<std::string> e_expected{"x^2"}, g_expected{"x^3"};
        if (height == 4) {
            e_expected = {"x^2", "x^3"};
            g_expected = {"x^4"};
        }
        const bool this_ok = formatted(em, g) == e_expected && check_condition_ii(e) &&
                             formatted(gm, g) == g_expected && dims_match_target(q, h) && t < 10.0;
        ok = ok && this_ok;
        detail += "CP^" + std::to_string(height - 1) + " " + (this_ok ? "ok" : "bad") + " " + fmt_time(t) + "; ";
    }
    report(2, ok, detail + "E, condition (ii), goods, bijective to 12, each < 10s");
}

void discrepancy()
{
    const auto s2 = corpus::even_sphere(2);
    const auto h = corpus::wedge(s2, s2);
    const auto result = run_pipeline(h);
    const auto& q = *result.quasi;

    // independent degreewise rank oracle
    const auto oracle_h5 = oracle::cohomology_dim(testutil::to_oracle(*result.model), 5);
    constexpr std::size_t frozen_h5 = 2;

    const auto dir = fs::temp_directory_path() / ("formacheck_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write_text_file(dir / "wedge.json", algebra_to_json(h).dump(2));
    std::ostringstream out, err;
    const int code = run_check(dir / "wedge.json", {}, out, err);
    fs::remove_all(dir);

    const bool ok = result.verdict.condition_i &&
                    result.verdict.classification == Classification::formal_by_theorem && q.first_failure &&
                    *q.first_failure == 5 && q.degrees[5].model_cohomology_dim == frozen_h5 &&
                    oracle_h5 == frozen_h5 && code == 4;
    report(3, ok,
           "S^2 v S^2: condition (i), first failure " + (q.first_failure ? std::to_string(*q.first_failure) : "none") +
               ", model H^5 = " + std::to_string(q.degrees[5].model_cohomology_dim) + " (oracle " +
               std::to_string(oracle_h5) + "), exit " + std::to_string(code));
}

std::vector<GradedAlgebra> acceptance_corpus()
{
    auto all = testutil::standard_corpus();
    all.push_back(corpus::truncated_poly(6, 3));
    all.push_back(corpus::product(corpus::even_sphere(4), corpus::even_sphere(4)));
    all.push_back(corpus::wedge(corpus::wedge(corpus::even_sphere(2), corpus::even_sphere(2)), corpus::even_sphere(4)));
    return all;
}

void differential_identities()
{
    const auto t0 = Clock::now();
    const auto all = acceptance_corpus();
    bool ok = all.size() >= 10;
    std::size_t checks = 0;
    for (const auto& h : all) {
        const auto model = build_model(h, choose_generators(h));
        for (int n = 0; n <= default_cap(h); ++n) {
            const auto dn = differential_matrix(model, n);
            ok = ok && (differential_matrix(model, n + 1) * dn).is_zero();
            ok = ok && (phi_tilde_matrix(model, h, n + 1) * dn).is_zero();
            ++checks;
        }
    }
    report(4, ok,
           std::to_string(all.size()) + " corpus algebras, " + std::to_string(checks) +
               " degrees: d^2 = 0 and phi~ d = 0, " + fmt_time(seconds_since(t0)));
}

void duality()
{
    const auto t0 = Clock::now();
    std::mt19937 rng(550);
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    std::uniform_int_distribution<std::size_t> top(1, 6);
    bool ok = true;
    int nontrivial = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> dims(top(rng) + 1);
        for (auto& d : dims)
            d = dim(rng);
        std::vector<MatQ> bs;
        MatQ prev(0, dims[0]);
        for (std::size_t n = 1; n < dims.size(); ++n) {
            const auto k = kernel_basis(prev);
            const MatQ kmat = k.empty() ? MatQ(dims[n - 1], 0) : MatQ::from_columns(k, dims[n - 1]);
            bs.push_back(kmat * testutil::random_matrix(rng, k.size(), dims[n], 5));
            nontrivial += bs.back().is_zero() ? 0 : 1;
            prev = bs.back();
        }
        const ChainComplexQ c(dims, bs);
        for (const auto& r : duality_check(c))
            ok = ok && r.equal;
    }
    const double t = seconds_since(t0);
    ok = ok && t < 2.0;
    report(5, ok,
           "20 random complexes (" + std::to_string(nontrivial) + " nonzero boundaries): homology = dual cohomology, " +
               fmt_time(t) + " < 2s");
}

void corollary()
{
    const auto t0 = Clock::now();
    std::size_t sets = 0, mismatches = 0;
    std::vector<int> f;
    std::function<void(int)> rec = [&](int next) {
        if (!f.empty()) {
            ++sets;
            const auto flags = corollary_integer_check(f);
            // the last degree is the only new one; shorter prefixes were checked before
            const std::size_t k = f.size() - 1;
            if (k > 0) {
                const std::vector<int> prefix(f.begin(), f.end() - 1);
                if (flags[k] == oracle::integer_combination(prefix, f[k], f[k]))
                    ++mismatches;
            } else if (!flags[0]) {
                ++mismatches;
            }
        }
        if (f.size() == 4)
            return;
        for (int n = next; n <= 40; ++n) {
            f.push_back(n);
            rec(n + 1);
            f.pop_back();
        }
    };
    rec(1);
    report(6, mismatches == 0 && sets == 102090,
           std::to_string(sets) + " degree sets (<= 4 elements, entries <= 40), " + std::to_string(mismatches) +
               " disagreements with exhaustive search, " + fmt_time(seconds_since(t0)));
}

std::string strip_timestamp(const std::string& text)
{
    auto doc = Json::parse(text);
    doc.erase("generated_at");
    return doc.dump(2);
}

void determinism()
{
    const auto dir = fs::temp_directory_path() / ("formacheck_acceptance_det_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    bool ok = true;
    int runs = 0;
    const auto s2 = corpus::even_sphere(2);
    for (const auto& h : {corpus::truncated_poly(2, 4), corpus::wedge(s2, s2), corpus::product(s2, s2)}) {
        const auto input = dir / "in.json";
        write_text_file(input, algebra_to_json(h).dump(2));
        std::string first;
        for (unsigned threads : {1u, 4u}) {
            CheckOptions o;
            o.report = dir / "cert.json";
            o.threads = threads;
            std::ostringstream out, err;
            run_check(input, o, out, err);
            const auto text = read_text_file(*o.report);
            const auto raw = Json::parse(text);
            ok = ok && raw.contains("generated_at");
            const auto stripped = strip_timestamp(text);
            if (first.empty())
                first = stripped;
            else
                ok = ok && stripped == first;
            ++runs;
        }
    }
    fs::remove_all(dir);
    report(7, ok, std::to_string(runs) + " check runs: certificates identical apart from generated_at");
}

void good_object_bound()
{
    const auto t0 = Clock::now();
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> ngen(1, 4);
    std::uniform_int_distribution<int> gdeg(1, 3);
    std::uniform_int_distribution<int> topd(2, 12);
    std::uniform_int_distribution<int> nrel(0, 3);
    std::uniform_int_distribution<unsigned> expo(0, 3);
    int algebras = 0, goods_total = 0, worst = 0;
    bool ok = true;
    for (int trial = 0; trial < 300; ++trial) {
        const int k = ngen(rng);
        std::vector<int> degrees(static_cast<std::size_t>(k));
        for (auto& d : degrees)
            d = 2 * gdeg(rng);
        const int top = topd(rng);
        std::vector<std::vector<unsigned>> relations(static_cast<std::size_t>(nrel(rng)));
        for (auto& r : relations) {
            r.resize(static_cast<std::size_t>(k));
            unsigned total = 0;
            for (auto& e : r)
                total += (e = expo(rng));
            if (total == 0)
                r[0] = 2;
        }
        const auto h = corpus::monomial_algebra(degrees, relations, top);
        if (!validate(h).ok()) {
            ok = false;
            continue;
        }
        ++algebras;
        const auto g = choose_generators(h);
        for (const auto& o : good_objects(h, g)) {
            ++goods_total;
            worst = std::max(worst, o.monomial.degree - 2 * h.top_degree());
            ok = ok && o.monomial.degree <= 2 * h.top_degree();
        }
    }
    const double t = seconds_since(t0);
    ok = ok && t < 30.0;
    report(8, ok,
           std::to_string(algebras) + " random algebras, " + std::to_string(goods_total) +
               " good objects, max(|m| - 2 top) = " + std::to_string(worst) + ", " + fmt_time(t) + " < 30s");
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<void()>>> criteria{
        {1, sphere},  {2, projective_spaces}, {3, discrepancy}, {4, differential_identities},
        {5, duality}, {6, corollary},         {7, determinism}, {8, good_object_bound},
    };
    for (const auto& [n, run] : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(n, false, std::string("exception: ") + e.what());
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
