#ifndef ATKIN_VERIFY_HPP
#define ATKIN_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "atkin_functional.hpp"
#include "atkin_polys.hpp"
#include "congruence.hpp"
#include "errors.hpp"
#include "extremal_forms.hpp"
#include "faber.hpp"
#include "json_io.hpp"
#include "modular_forms.hpp"
#include "report.hpp"
#include "rogers_cf.hpp"

namespace atkin
{

struct verify_options
{
    long precision = 32;
    long order = 5; // bi-order for the two-variable generating series
    long pmax = 97;
    unsigned jobs = 1;
    bool progress = false;
    std::ostream *log = &std::cerr;
};

struct verify_task
{
    std::string suite;
    std::string name;
    std::function<report()> run;
};

struct verify_entry
{
    std::string suite;
    check_entry entry;
    double seconds = 0;
};

struct verify_result
{
    std::vector<verify_entry> entries;
    long precision = 0;
    long order = 0;

    bool passed() const
    {
        return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.entry.passed; });
    }
    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const auto &e) { return !e.entry.passed; }));
    }
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"section2", "section3", "section4", "section5",
                                                "section6", "congruence", "rogers", "properties"};
    return names;
}

// Ten (k, l) pairs with l + m >= 2, spread over the weight classes.
inline std::vector<std::pair<long, long>> coefficient_pairs()
{
    std::vector<std::pair<long, long>> out;
    const long ks[] = {-12, -4, 0, 2, 6, 8, 14, 18, 22, 26};
    for (int i = 0; i < 10; ++i) {
        const long k = ks[i];
        out.emplace_back(k, 2 - weight_decompose(k).m + i % 4);
    }
    return out;
}

namespace detail
{

inline report poly_route_check()
{
    report rep;
    rep.suite = "poly_routes";
    for (int r : {0, 2, 6, 8}) {
        const long lo = (r == 0 || r == 2) ? 1 : 0;
        for (long n = lo; n <= 10; ++n) {
            const std::string tag = "r=" + std::to_string(r) + ",n=" + std::to_string(n);
            const poly a = atkin_poly_recursive(r, n), b = adjoint_poly_recursive(r, n);
            rep.add("A(" + tag + ")", a == atkin_poly_closed(r, n) && a.is_monic(), a.to_text());
            rep.add("B(" + tag + ")", b == adjoint_poly_closed(r, n) && b.is_monic(), b.to_text());
        }
    }
    return rep;
}

inline report g_display_check()
{
    report rep;
    rep.suite = "g_displays";
    const qseries g12 = extremal_series(12, 8), g14 = extremal_series(14, 8);
    rep.add("G12", g12 == series_from_ints("q", 2, {1, 56, 1002, 9296, 57708, 269040}, 8), g12.to_text(), 8);
    rep.add("G14", g14 == series_from_ints("q", 2, {1, 128, 4050, 58880, 525300, 3338496}, 8), g14.to_text(), 8);
    return rep;
}

inline report extremal_routes_check(long prec)
{
    report rep;
    rep.suite = "extremal_routes";
    for (long w = 2; w <= 50; w += 2) {
        const qseries ref = extremal_series(w, prec, extremal_route::diff_recursion);
        for (auto r : {extremal_route::linear_recursion, extremal_route::ab_polys, extremal_route::hypergeometric}) {
            rep.add("w=" + std::to_string(w) + "/" + route_name(r), extremal_series(w, prec, r) == ref, {}, prec);
        }
    }
    return rep;
}

inline report faber_routes_check(bool include_hypergeometric)
{
    report rep;
    rep.suite = "faber_routes";
    for (long k = -12; k <= 26; k += 2) {
        for (long n = 0; n <= 6; ++n) {
            const std::string tag = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
            const poly g = faber_poly(k, n);
            const bool integral_monic = g.is_monic() && g.has_integer_coeffs();
            if (include_hypergeometric) {
                rep.add("hypergeometric(" + tag + ")", faber_poly(k, n, faber_route::hypergeometric) == g, g.to_text());
            } else {
                rep.add("recognition(" + tag + ")", faber_poly(k, n, faber_route::recognition) == g && integral_monic,
                        g.to_text());
                rep.add("dual(" + tag + ")", faber_poly_dual_genfunc(2 - k, n) == g);
            }
        }
    }
    return rep;
}

inline report fourier_theorem_sweep()
{
    report rep;
    rep.suite = "fourier_theorem";
    for (long k = -12; k <= 26; k += 2) {
        const weight_decomp d = weight_decompose(k);
        for (long l = -2; l <= 2; ++l) {
            if (fourier_index_valid(12 * l + d.r())) {
                report r = fourier_coeff_theorem_check(l, k, 5);
                for (auto &e : r.entries) {
                    e.id = "k=" + std::to_string(k) + "/" + e.id;
                }
                rep.append(r);
            }
        }
    }
    return rep;
}

inline report corollary_sweep()
{
    report rep;
    rep.suite = "corollaries";
    const auto tagged = [&](const report &r, const std::string &tag) {
        for (auto e : r.entries) {
            e.id = tag + "/" + e.id;
            rep.entries.push_back(e);
        }
    };
    for (long k : {-12L, -2L, 0L, 4L, 6L, 10L, 14L, 20L}) {
        tagged(corollary_checks(corollary::cor42, {k, 5, 0, 0, 6}), "cor42,k=" + std::to_string(k));
    }
    for (long k : {-10L, 0L, 2L, 8L, 14L, 24L}) {
        const weight_decomp d = weight_decompose(k);
        for (long l = -1; l <= 2; ++l) {
            if (!fourier_index_valid(12 * l + d.r())) {
                continue;
            }
            const std::string kl = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
            tagged(corollary_checks(corollary::cor44_oFOF, {k, 4, l, 0, 6}), "oFOF," + kl);
            for (long l2 = -1; l2 <= 2; ++l2) {
                if (fourier_index_valid(12 * l2 + 14 - d.r())) {
                    tagged(corollary_checks(corollary::cor44_ooOO, {k, 4, l, l2, 6}),
                           "ooOO," + kl + ",l'=" + std::to_string(l2));
                }
            }
        }
    }
    tagged(corollary_checks(corollary::denominator_formula, {0, 0, 0, 0, 6}), "denominator");
    return rep;
}

inline report h_poly_check()
{
    report rep;
    rep.suite = "h_polys";
    for (long n = 0; n <= 6; ++n) {
        rep.add("H" + std::to_string(n), h_poly(n, h_route::hecke) == h_poly(n, h_route::faber_shift));
    }
    return rep;
}

inline report ramanujan_check(long prec)
{
    report rep;
    rep.suite = "ramanujan";
    const qseries e2 = eisenstein_series(2, prec), e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec);
    rep.add("D(E2)", e2.d_operator() == (e2 * e2 - e4) / rat(12), {}, prec);
    rep.add("D(E4)", e4.d_operator() == (e2 * e4 - e6) / rat(3), {}, prec);
    rep.add("D(E6)", e6.d_operator() == (e2 * e6 - e4 * e4) / rat(2), {}, prec);
    const qseries d = delta(prec + 1);
    rep.add("D(Delta)/Delta", agrees(d.d_operator() / d, e2, prec), {}, prec);
    rep.add("Delta product", agrees(delta(prec), delta_product(prec), prec), {}, prec);
    return rep;
}

// Fixed-seed integer series; the seed is part of the check, not a user knob.
inline report leibniz_check(long prec)
{
    report rep;
    rep.suite = "leibniz";
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-20, 20);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<rat> a, b;
        for (long e = 0; e < prec; ++e) {
            a.emplace_back(num(rng));
            b.emplace_back(num(rng));
        }
        const qseries f("q", 0, prec, a), g("q", 0, prec, b);
        const long k = 2 * (trial % 4), l = 2 * (trial % 3) + 4;
        rep.add("trial" + std::to_string(trial),
                serre_derivative(f * g, rat(k + l)) == serre_derivative(f, rat(k)) * g + f * serre_derivative(g, rat(l)),
                "k=" + std::to_string(k) + ",l=" + std::to_string(l), prec);
    }
    return rep;
}

inline report hankel_check(long order)
{
    report rep;
    rep.suite = "hankel";
    for (long k = 1; k <= order; ++k) {
        const rat h = hankel_determinant(k);
        rep.add("det H" + std::to_string(k), sgn(h) > 0, to_string(h));
    }
    return rep;
}

inline report congruence_sweep(long pmax)
{
    report rep;
    rep.suite = "congruence";
    for (long p = 5; p <= pmax; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        report r = thm24_check(p);
        for (auto &e : r.entries) {
            e.id = "p=" + std::to_string(p) + "/" + e.id;
        }
        rep.append(r);
    }
    return rep;
}

// "p=11" sorts after "p=7": digit runs compare by value.
inline bool natural_less(const std::string &a, const std::string &b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) {
                ++ie;
            }
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) {
                ++je;
            }
            std::string x = a.substr(i, ie - i), y = b.substr(j, je - j);
            x.erase(0, std::min(x.find_first_not_of('0'), x.size() - 1));
            y.erase(0, std::min(y.find_first_not_of('0'), y.size() - 1));
            if (x.size() != y.size()) {
                return x.size() < y.size();
            }
            if (x != y) {
                return x < y;
            }
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) {
            return a[i] < b[j];
        }
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

} // namespace detail

inline std::vector<verify_task> suite_tasks(const std::string &suite, const verify_options &o)
{
    const long P = o.precision, O = o.order;
    std::vector<verify_task> t;
    const auto add = [&](std::string name, std::function<report()> f) { t.push_back({suite, std::move(name), std::move(f)}); };
    if (suite == "section2") {
        add("poly_routes", detail::poly_route_check);
        const std::pair<expansion_set, const char *> sets[] = {{expansion_set::prop2_3, "prop2_3"},
                                                               {expansion_set::eqs3_3_to_3_6, "eqs3_3_to_3_6"},
                                                               {expansion_set::prop3_2, "prop3_2"},
                                                               {expansion_set::geronimus, "geronimus"},
                                                               {expansion_set::lemma_cnr, "lemma_cnr"}};
        for (const auto &[w, name] : sets) {
            add(name, [w = w] { return expansion_identities_check(w, 7); });
        }
    } else if (suite == "section3") {
        add("stieltjes", [P] { return stieltjes_check(P / 2); });
        add("image_formulas", [] { return image_formulas_check(4, 14); });
        add("orthogonality", [] { return orthogonality_suite(6); });
        add("g_displays", detail::g_display_check);
        add("extremal_routes", [P] { return detail::extremal_routes_check(std::min(P, 24L)); });
        const std::pair<operator_identity, const char *> ops[] = {{operator_identity::Lw_annihilates, "Lw_annihilates"},
                                                                  {operator_identity::Kupup, "Kupup"},
                                                                  {operator_identity::partialKup, "partialKup"},
                                                                  {operator_identity::Lw2, "Lw2"}};
        for (const auto &[w, name] : ops) {
            add(name, [w = w] { return operator_identity_check(w, {0, 6, 12, 18, 24}, 20); });
        }
        add("linear_recursion", [] { return linear_recursion_check({6, 12, 18, 24}, 24); });
    } else if (suite == "section4") {
        add("faber_routes", [] { return detail::faber_routes_check(false); });
        add("fourier_theorem", detail::fourier_theorem_sweep);
        add("corollaries", detail::corollary_sweep);
        add("h_polys", detail::h_poly_check);
    } else if (suite == "section5") {
        for (long l = 0; l <= 3; ++l) {
            add("prop51,l=" + std::to_string(l), [l, O] { return section5_series(section5::prop51, {l, O, 0}); });
        }
        for (long l = 1; l <= 3; ++l) {
            add("cor52_i,l=" + std::to_string(l), [l, O] { return section5_series(section5::cor52_i, {l, O, 0}); });
        }
        add("cor52_ii", [O] { return section5_series(section5::cor52_ii, {0, O, 0}); });
        add("eqFFpq", [O] { return section5_series(section5::eqFFpq, {0, O, 0}); });
        add("thm53", [O] { return section5_series(section5::thm53, {0, O, 0}); });
        for (long k : {-12L, 2L, 4L, 6L, 14L, 26L}) {
            add("cor54,k=" + std::to_string(k), [k, O] { return section5_series(section5::cor54, {0, O, k}); });
        }
    } else if (suite == "section6") {
        add("inverse_series", [P] { return inverse_series_check(std::max(6L, P / 2)); });
        add("hypergeometric_faber", [] { return detail::faber_routes_check(true); });
        add("c1_c2", [] { return faber_coeff_formula_check(coefficient_pairs()); });
    } else if (suite == "congruence") {
        add("thm24", [p = o.pmax] { return detail::congruence_sweep(p); });
    } else if (suite == "rogers") {
        add("sj_consistency", [] { return sj_consistency(atkin_cf(7)); });
        add("phi_routes", [] { return phi_routes_check(4, 12); });
        add("addition_cosine", [] { return addition_formula_check(addition_case::cosine, 8); });
        add("addition_atkin", [O] { return addition_formula_check(addition_case::atkin, O); });
        add("addphi", [O] { return addphi_check(O); });
    } else if (suite == "properties") {
        add("ramanujan", [P] { return detail::ramanujan_check(P); });
        add("leibniz", [P] { return detail::leibniz_check(std::min(P, 20L)); });
        add("hecke_selfadjoint", [] { return hecke_selfadjoint_check(4); });
        add("hankel", [] { return detail::hankel_check(6); });
    } else {
        throw domain_error("unknown suite '" + suite + "'");
    }
    return t;
}

inline void validate(const verify_options &o)
{
    if (o.precision < 8) {
        throw domain_error("verification needs precision >= 8");
    }
    if (o.order < 2 || o.order > 12) {
        throw domain_error("bi-order must lie in [2, 12]");
    }
    if (o.pmax < 5 || o.pmax > 1000) {
        throw domain_error("pmax must lie in [5, 1000]");
    }
}

// A task that throws becomes one failed entry; the rest of the suite still runs.
inline verify_result run_suites(const std::vector<std::string> &suites, const verify_options &o)
{
    validate(o);
    std::vector<verify_task> tasks;
    for (const auto &s : suites) {
        auto t = suite_tasks(s, o);
        tasks.insert(tasks.end(), t.begin(), t.end());
    }
    std::vector<std::vector<verify_entry>> out(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mu;
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto &task = tasks[i];
            const auto t0 = std::chrono::steady_clock::now();
            report rep;
            try {
                rep = task.run();
                if (rep.entries.empty()) {
                    rep.add("nonempty", false, "check produced no entries");
                }
            } catch (const std::exception &e) {
                rep.entries.clear();
                rep.add("exception", false, e.what());
            }
            const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (auto &e : rep.entries) {
                e.id = task.name + "/" + e.id;
                out[i].push_back({task.suite, e, sec});
            }
            if (o.progress) {
                std::lock_guard<std::mutex> lock(log_mu);
                *o.log << "[" << task.suite << "] " << task.name << ": " << rep.entries.size() - rep.failures() << "/"
                          << rep.entries.size() << " pass (" << sec << " s)\n";
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    verify_result res;
    res.precision = o.precision;
    res.order = o.order;
    for (auto &v : out) {
        res.entries.insert(res.entries.end(), v.begin(), v.end());
    }
    const auto rank = [](const std::string &s) {
        const auto &n = suite_names();
        return std::find(n.begin(), n.end(), s) - n.begin();
    };
    std::stable_sort(res.entries.begin(), res.entries.end(), [&](const verify_entry &a, const verify_entry &b) {
        if (a.suite != b.suite) {
            return rank(a.suite) < rank(b.suite);
        }
        return detail::natural_less(a.entry.id, b.entry.id);
    });
    return res;
}

inline verify_result verify_all(const verify_options &o)
{
    return run_suites(suite_names(), o);
}

// Timing is wall-clock and so only written on request; the default report is byte-stable.
inline json to_json(const verify_result &r, bool timing = false)
{
    json suites = json::array();
    for (const auto &name : suite_names()) {
        json entries = json::array();
        std::size_t fails = 0;
        for (const auto &e : r.entries) {
            if (e.suite != name) {
                continue;
            }
            json j = to_json(e.entry);
            if (timing) {
                j["seconds"] = e.seconds;
            }
            entries.push_back(std::move(j));
            fails += e.entry.passed ? 0 : 1;
        }
        if (entries.empty()) {
            continue;
        }
        suites.push_back(json{{"name", name}, {"passed", fails == 0}, {"failures", fails}, {"entries", std::move(entries)}});
    }
    return json{{"precision", r.precision},
                {"order", r.order},
                {"passed", r.passed()},
                {"failures", r.failures()},
                {"suites", std::move(suites)}};
}

} // namespace atkin

#endif
