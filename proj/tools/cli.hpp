#ifndef ATKIN_TOOLS_CLI_HPP
#define ATKIN_TOOLS_CLI_HPP

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <atkin/atkin_functional.hpp>
#include <atkin/atkin_polys.hpp>
#include <atkin/congruence.hpp>
#include <atkin/extremal_forms.hpp>
#include <atkin/faber.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/json_io.hpp>
#include <atkin/modular_forms.hpp>
#include <atkin/rogers_cf.hpp>
#include <atkin/verify.hpp>

namespace atkin::cli
{

enum exit_code : int
{
    ok = 0,
    check_failed = 1,
    bad_input = 2
};

using value = std::variant<std::string, bool, long, rat, poly, qseries, std::vector<rat>, fp_poly>;

// One command result. All three output formats render the same fields.
struct doc
{
    std::vector<std::pair<std::string, value>> fields;
    void add(std::string label, value v) { fields.emplace_back(std::move(label), std::move(v)); }
};

namespace detail
{

inline std::string latex_rat(const rat &a)
{
    if (is_integer(a)) {
        return a.get_num().get_str();
    }
    return std::string(sgn(a) < 0 ? "-" : "") + "\\frac{" + integer(abs(a.get_num())).get_str() + "}{" + a.get_den().get_str() + "}";
}

inline std::string series_latex(const qseries &s)
{
    std::string out;
    const std::string &v = s.variable();
    for (long e = s.valuation(); e < s.precision(); ++e) {
        const rat &c = s.coeff(e);
        if (sgn(c) == 0) {
            continue;
        }
        out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        const rat a = abs(c);
        if (e == 0) {
            out += latex_rat(a);
            continue;
        }
        if (a != 1) {
            out += latex_rat(a) + " ";
        }
        out += v + (e == 1 ? "" : "^{" + std::to_string(e) + "}");
    }
    if (!out.empty()) {
        out += " + ";
    }
    return out + "O(" + v + "^{" + std::to_string(s.precision()) + "})";
}

inline std::string list_text(const std::vector<rat> &v, bool latex)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + (latex ? latex_rat(v[i]) : to_string(v[i]));
    }
    return out + "]";
}

inline std::string render(const value &v, bool latex)
{
    struct visitor
    {
        bool latex;
        std::string operator()(const std::string &s) const { return s; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(long n) const { return std::to_string(n); }
        std::string operator()(const rat &r) const { return latex ? latex_rat(r) : to_string(r); }
        std::string operator()(const poly &p) const { return latex ? p.to_latex() : p.to_text(); }
        std::string operator()(const qseries &s) const { return latex ? series_latex(s) : s.to_text(); }
        std::string operator()(const std::vector<rat> &l) const { return list_text(l, latex); }
        std::string operator()(const fp_poly &f) const { return f.to_text(); }
    };
    return std::visit(visitor{latex}, v);
}

inline json value_json(const value &v)
{
    struct visitor
    {
        json operator()(const std::string &s) const { return s; }
        json operator()(bool b) const { return b; }
        json operator()(long n) const { return n; }
        json operator()(const rat &r) const { return to_json(r); }
        json operator()(const poly &p) const { return to_json(p); }
        json operator()(const qseries &s) const { return to_json(s); }
        json operator()(const std::vector<rat> &l) const { return to_json(l); }
        json operator()(const fp_poly &f) const { return json{{"p", f.p}, {"coefficients", f.c}}; }
    };
    return std::visit(visitor{}, v);
}

} // namespace detail

inline void emit(const doc &d, const std::string &format, std::ostream &out)
{
    if (format == "json") {
        json j = json::object();
        for (const auto &[k, v] : d.fields) {
            j[k] = detail::value_json(v);
        }
        out << j.dump(2) << "\n";
        return;
    }
    const bool latex = format == "latex";
    if (d.fields.size() == 1) {
        out << detail::render(d.fields.front().second, latex) << "\n";
        return;
    }
    for (const auto &[k, v] : d.fields) {
        out << k << (latex ? " = " : ": ") << detail::render(v, latex) << "\n";
    }
}

inline std::vector<rat> parse_rat_list(const std::string &s)
{
    std::vector<rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_rat(item));
    }
    return out;
}

inline qseries named_form(const std::string &name, long prec)
{
    if (name == "E2" || name == "E4" || name == "E6") {
        return eisenstein_series(name[1] - '0', prec);
    }
    if (name == "Delta") {
        return delta(prec);
    }
    if (name == "j") {
        return j_invariant(prec);
    }
    if (name == "t") {
        return t_of_q(prec);
    }
    if (name.size() > 1 && name[0] == 'G') {
        long w = 0;
        try {
            std::size_t used = 0;
            w = std::stol(name.substr(1), &used);
            if (used != name.size() - 1) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception &) {
            throw domain_error("bad form name '" + name + "'");
        }
        return extremal_series(w, prec);
    }
    throw domain_error("unknown form '" + name + "' (E2, E4, E6, Delta, j, t, G<w>)");
}

inline extremal_route parse_extremal_route(const std::string &s)
{
    if (s == "diff") {
        return extremal_route::diff_recursion;
    }
    if (s == "linear") {
        return extremal_route::linear_recursion;
    }
    if (s == "ab") {
        return extremal_route::ab_polys;
    }
    return extremal_route::hypergeometric;
}

inline faber_route parse_faber_route(const std::string &s)
{
    if (s == "recognition") {
        return faber_route::recognition;
    }
    if (s == "hypergeometric") {
        return faber_route::hypergeometric;
    }
    return faber_route::genfunc;
}

inline std::string label_poly(const std::string &f, long n, long r)
{
    return f + "_{" + std::to_string(n) + "," + std::to_string(r) + "}";
}

// Full command-line entry point; returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"Exact computations with Atkin-like polynomials, extremal quasimodular forms and Faber polynomials"};
    app.name("atkin_cli");
    app.fallthrough();
    app.require_subcommand(1);

    long precision = 32;
    std::string format = "text";
    long seed = 0;
    unsigned jobs = 1;
    app.add_option("--precision", precision, "truncation order of q-series")->check(CLI::Range(1L, 4096L));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--seed", seed, "accepted for compatibility; all computations are deterministic");
    app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::Range(1u, 256u));

    doc result;
    int status = ok;

    auto *forms = app.add_subcommand("forms", "q-expansion of E2, E4, E6, Delta, j, t or G<w>");
    std::string form_name;
    forms->add_option("name,--name", form_name, "form name")->required();
    forms->callback([&] { result.add(form_name, named_form(form_name, precision)); });

    auto *extremal_cmd = app.add_subcommand("extremal", "normalized extremal quasimodular form G_w");
    long weight = 0, terms = -1;
    std::string eroute = "diff";
    extremal_cmd->add_option("--weight", weight, "even weight w >= 0")->required()->check(CLI::Range(0L, 1000L));
    extremal_cmd->add_option("--terms", terms, "number of q-coefficients (default: --precision)")->check(CLI::Range(1L, 4096L));
    extremal_cmd->add_option("--route", eroute)->check(CLI::IsMember({"diff", "linear", "ab", "hypergeometric", "all"}));
    extremal_cmd->callback([&] {
        const long n = terms > 0 ? terms : precision;
        qseries g = extremal_series(weight, n);
        if (eroute == "all") {
            for (auto r : {extremal_route::linear_recursion, extremal_route::ab_polys, extremal_route::hypergeometric}) {
                if (extremal_series(weight, n, r) != g) {
                    err << "route " << route_name(r) << " disagrees at w=" << weight << "\n";
                    status = check_failed;
                }
            }
        } else {
            g = extremal_series(weight, n, parse_extremal_route(eroute));
        }
        result.add("G" + std::to_string(weight), g.with_valuation(0));
    });

    auto *apoly = app.add_subcommand("atkin-poly", "Atkin-like polynomial A_{n,r} or its adjoint B_{n,r}");
    long r = 2, n = 0;
    std::string family = "A", proute = "recursive";
    apoly->add_option("--r", r, "class r in {0, 2, 6, 8}")->required()->check(CLI::IsMember({0L, 2L, 6L, 8L}));
    apoly->add_option("--n", n, "index n >= 0")->required()->check(CLI::Range(0L, 200L));
    apoly->add_option("--family", family)->check(CLI::IsMember({"A", "B"}));
    apoly->add_option("--route", proute)->check(CLI::IsMember({"recursive", "closed", "both"}));
    apoly->callback([&] {
        const poly_family f = family == "A" ? poly_family::A : poly_family::B;
        const int ri = static_cast<int>(r);
        poly p;
        if (proute == "both") {
            p = family_poly(f, ri, n, poly_route::recursive);
            if (family_poly(f, ri, n, poly_route::closed) != p) {
                err << "recursive and closed routes disagree\n";
                status = check_failed;
            }
        } else {
            p = family_poly(f, ri, n, proute == "closed" ? poly_route::closed : poly_route::recursive);
        }
        result.add(label_poly(family, n, r), p);
    });

    auto *mom = app.add_subcommand("moments", "moments L(X^n) of the Atkin functional");
    long count = 8;
    mom->add_option("--count", count)->check(CLI::Range(1L, 1000L));
    mom->callback([&] {
        std::vector<rat> m;
        for (const auto &x : moments(count)) {
            m.emplace_back(x);
        }
        result.add("moments", m);
    });

    auto *ip = app.add_subcommand("inner-product", "Atkin inner product of two polynomials in j");
    std::string fj, gj;
    ip->add_option("--f", fj, "polynomial as JSON, ascending coefficients")->required();
    ip->add_option("--g", gj, "polynomial as JSON, ascending coefficients")->required();
    ip->callback([&] { result.add("inner_product", inner_product(poly_from_json_text(fj), poly_from_json_text(gj))); });

    auto *fab = app.add_subcommand("faber", "generalized Faber polynomial F_{k,n}");
    long fk = 0, fn = 0;
    std::string froute = "genfunc";
    fab->add_option("--weight", fk, "even weight k")->required()->check(CLI::Range(-1000L, 1000L));
    fab->add_option("--n", fn, "degree n >= 0")->required()->check(CLI::Range(0L, 200L));
    fab->add_option("--route", froute)->check(CLI::IsMember({"genfunc", "recognition", "hypergeometric", "all"}));
    fab->callback([&] {
        poly p = faber_poly(fk, fn);
        if (froute == "all") {
            for (auto rt : {faber_route::recognition, faber_route::hypergeometric}) {
                if (faber_poly(fk, fn, rt) != p) {
                    err << "route " << route_name(rt) << " disagrees\n";
                    status = check_failed;
                }
            }
        } else {
            p = faber_poly(fk, fn, parse_faber_route(froute));
        }
        result.add(label_poly("F", fn, fk), p);
    });

    auto *om = app.add_subcommand("omega", "column sum_n omega_{k,n}(l) p^n of expansion coefficients");
    long ok_ = 14, ol = 0, ocount = 6;
    std::string kind = "omega";
    om->add_option("--k", ok_, "even weight k")->required()->check(CLI::Range(-1000L, 1000L));
    om->add_option("--l", ol, "basis index")->required()->check(CLI::Range(-2L, 200L));
    om->add_option("--count", ocount, "number of p-coefficients")->check(CLI::Range(1L, 40L));
    om->add_option("--kind", kind)->check(CLI::IsMember({"omega", "Omega"}));
    om->callback([&] {
        const coeff_kind ck = kind == "omega" ? coeff_kind::omega : coeff_kind::Omega;
        std::vector<rat> c;
        for (long i = 0; i < ocount; ++i) {
            c.push_back(expansion_coeffs(ck, ok_, i).at(ol));
        }
        result.add(kind + "(" + std::to_string(ol) + ")", qseries("p", 0, ocount, std::move(c)));
    });

    auto *hyp = app.add_subcommand("hyp", "truncated pFq or 2G1 series in z");
    std::string upper, lower;
    bool g21 = false;
    hyp->add_option("--upper", upper, "comma-separated upper parameters")->required();
    hyp->add_option("--lower", lower, "comma-separated lower parameters");
    hyp->add_flag("--g21", g21, "the log-companion 2G1(a, b) (two upper parameters, lower parameter 1)");
    hyp->callback([&] {
        const std::vector<rat> a = parse_rat_list(upper);
        if (g21) {
            if (a.size() != 2 || !lower.empty()) {
                throw invalid_params("2G1 takes exactly two upper parameters and no lower ones");
            }
            result.add("2G1", g21_series(a[0], a[1], precision));
            return;
        }
        const hyp_params h{a, lower.empty() ? std::vector<rat>{} : parse_rat_list(lower)};
        result.add(std::to_string(h.upper.size()) + "F" + std::to_string(h.lower.size()), pfq_series(h, precision));
    });

    auto *cong = app.add_subcommand("congruence", "supersingular polynomial and reduced Atkin-like polynomials mod p");
    long prime = 5;
    cong->add_option("--prime", prime, "prime p >= 5")->required()->check(CLI::Range(5L, 2000L));
    cong->callback([&] {
        check_prime_modulus(prime);
        const fp_poly ss = supersingular_poly(prime);
        result.add("ss_p", ss);
        bool all = true;
        for (const auto &[name, p] : congruence_family(prime)) {
            const fp_poly red = reduce_poly_mod_p(p, prime);
            all = all && red == ss;
            result.add(name, red);
        }
        result.add("agree", all);
        if (!all) {
            status = check_failed;
        }
    });

    auto *cf = app.add_subcommand("cfrac", "S- and J-fraction coefficients of the Stieltjes function");
    long depth = 6;
    cf->add_option("--depth", depth, "number of J-fraction levels")->check(CLI::Range(1L, 60L));
    cf->callback([&] {
        const cf_coeffs c = atkin_cf(depth);
        result.add("e", c.e);
        result.add("alpha", c.alpha);
        result.add("beta", c.beta);
        result.add("A", c.A);
    });

    auto *ver = app.add_subcommand("verify", "run identity suites and report pass/fail");
    std::vector<std::string> suites{"all"};
    long pmax = 97, order = 5;
    bool timing = false, quiet = false;
    std::vector<std::string> allowed = suite_names();
    allowed.emplace_back("all");
    ver->add_option("--suite", suites, "suite name or all; repeatable")->check(CLI::IsMember(allowed))->delimiter(',');
    ver->add_option("--pmax", pmax, "largest prime in the congruence sweep")->check(CLI::Range(5L, 1000L));
    ver->add_option("--order", order, "bi-order of the two-variable series")->check(CLI::Range(2L, 12L));
    ver->add_flag("--timing", timing, "include wall-clock seconds per entry (output is then not reproducible)");
    ver->add_flag("--quiet", quiet, "no progress lines on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        return bad_input;
    }

    if (ver->parsed()) {
        verify_options o;
        o.precision = precision;
        o.order = order;
        o.pmax = pmax;
        o.jobs = jobs;
        o.progress = !quiet;
        o.log = &err;
        std::vector<std::string> names;
        for (const auto &s : suites) {
            if (s == "all") {
                names = suite_names();
                break;
            }
            if (std::find(names.begin(), names.end(), s) == names.end()) {
                names.push_back(s);
            }
        }
        verify_result res;
        try {
            res = run_suites(names, o);
        } catch (const error &e) {
            err << e.what() << "\n";
            return bad_input;
        }
        if (format == "json") {
            out << to_json(res, timing).dump(2) << "\n";
        } else {
            for (const auto &e : res.entries) {
                out << (e.entry.passed ? "PASS " : "FAIL ") << e.suite << " " << e.entry.id;
                if (e.entry.order > 0) {
                    out << " [order " << e.entry.order << "]";
                }
                if (timing) {
                    out << " " << e.seconds << "s";
                }
                if (!e.entry.passed && !e.entry.detail.empty()) {
                    out << " : " << e.entry.detail;
                }
                out << "\n";
            }
            out << (res.passed() ? "all " : "") << res.entries.size() - res.failures() << "/" << res.entries.size()
                << " identities pass\n";
        }
        return res.passed() ? ok : check_failed;
    }

    emit(result, format, out);
    return status;
}

} // namespace atkin::cli

#endif
