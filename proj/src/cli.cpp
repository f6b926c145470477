#include "vw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "vw/acceptance.hpp"
#include "vw/assemble.hpp"
#include "vw/closedform.hpp"
#include "vw/output.hpp"
#include "vw/qseries.hpp"
#include "vw/surfring.hpp"
#include "vw/tautcalc.hpp"

namespace vw::cli {

namespace {

/// Shared --surface / --K2 / --c2 selection; absent means symbolic.
struct SurfaceOpts {
    std::string preset;
    bool symbolic = false;
    long K2 = 0;
    long c2 = 0;
    CLI::Option* preset_opt = nullptr;
    CLI::Option* k2_opt = nullptr;

    void attach(CLI::App* cmd) {
        preset_opt = cmd->add_option("--surface", preset,
                                     "surface preset: quintic, octic-double-cover, blowup-k3");
        cmd->add_flag("--symbolic", symbolic, "keep parameters formal (default)");
        k2_opt = cmd->add_option("--K2", K2, "custom surface: c1(S)^2 (with --c2)");
        CLI::Option* c2_opt = cmd->add_option("--c2", c2, "custom surface: c2(S) (with --K2)");
        k2_opt->needs(c2_opt);
        c2_opt->needs(k2_opt);
        preset_opt->excludes(k2_opt);
    }

    std::optional<SurfaceData> resolve() const {
        if (preset_opt && preset_opt->count() > 0) return surface_preset(preset);
        if (k2_opt && k2_opt->count() > 0) return SurfaceData::custom(K2, c2);
        return std::nullopt;
    }
};

std::map<std::string, Poly> as_poly_values(const std::map<std::string, Rational>& vals) {
    std::map<std::string, Poly> r;
    for (const auto& [k, v] : vals) r[k] = Poly(v);
    return r;
}

NormalizationRecord record_at(const NormalizationRecord& n,
                              const std::optional<SurfaceData>& s) {
    if (!s) return n;
    return n.subst(as_poly_values(s->param_values()));
}

Json parameters_json(const std::optional<SurfaceData>& s) {
    Json p;
    p["surface"] = s ? s->name : "symbolic";
    if (s) {
        p["K2"] = s->K2;
        p["c2"] = s->c2;
        p["chi"] = s->chi;
        p["g"] = s->g;
        p["pg"] = s->pg;
    }
    return p;
}

std::string ring_value_text(const RingValue& v, const std::optional<SurfaceData>& s) {
    if (!s) return v.norm.str() + " * (" + v.bracket.str() + ")";
    auto vals = s->param_values();
    Rational bracket = v.bracket.eval(vals);
    Rational full = v.norm.evaluate(vals) * bracket;
    return record_at(v.norm, s).str() + " * (" + bracket.str() + ") = " + full.str();
}

Json ring_value_json(const RingValue& v, const std::optional<SurfaceData>& s) {
    Json j;
    j["normalization"] = normalization_json(record_at(v.norm, s));
    if (s) {
        auto vals = s->param_values();
        j["bracket"] = v.bracket.eval(vals).str();
        j["value"] = (v.norm.evaluate(vals) * v.bracket.eval(vals)).str();
    } else {
        j["bracket"] = v.bracket.str();
    }
    return j;
}

struct SeriesPayload {
    NormalizationRecord norm;
    std::vector<std::string> coeffs;
};

int emit_series(std::ostream& out, bool json, const std::string& command,
                const std::optional<SurfaceData>& s, int order, const SeriesPayload& p) {
    if (json) {
        Json j;
        j["command"] = command;
        Json params = parameters_json(s);
        params["order"] = order;
        j["parameters"] = params;
        j["normalization"] = normalization_json(p.norm);
        j["coefficients"] = p.coeffs;
        print_json(out, j);
    } else {
        out << "normalization: " << p.norm.str() << "\n";
        print_coefficients(out, "q", p.coeffs);
    }
    return 0;
}

int cmd_horizontal(std::ostream& out, bool json, const std::optional<SurfaceData>& s, int order) {
    std::vector<Poly> h = horizontal_series(order);
    PSeries bracket("q", order);
    for (int n = 0; n <= order; ++n) bracket.set_coeff(n, h[static_cast<size_t>(n)]);
    SeriesPayload p;
    p.norm = record_at(horizontal_normalization(), s);
    p.coeffs = s ? coeff_strings(eval_at(bracket, s->param_values())) : coeff_strings(bracket);
    return emit_series(out, json, "horizontal", s, order, p);
}

int cmd_closed_form(std::ostream& out, bool json, const std::optional<SurfaceData>& s, int order,
                    std::optional<long> g_value) {
    SeriesPayload p;
    if (g_value) {
        p.coeffs = coeff_strings(closed_form_series_at(*g_value, order));
        p.norm = closed_form_series(0).norm.subst({{"g", Poly(*g_value)}});
    } else {
        ClosedForm cf = closed_form_series(order);
        p.norm = record_at(cf.norm, s);
        p.coeffs =
            s ? coeff_strings(eval_at(cf.bracket, s->param_values())) : coeff_strings(cf.bracket);
    }
    return emit_series(out, json, "closed-form", s, order, p);
}

int cmd_diagonal_check(std::ostream& out, bool json, long g_value, int order) {
    QSeries direct = closed_form_series_at(g_value, order);
    QSeries residue = residue_series_at(g_value, order);
    QSeries diag = diagonal_to_bracket(diagonal(expand_double_series(g_value, order)), g_value);
    QSeries taut("q", order);
    std::map<std::string, Rational> at_g{{"g", Rational(g_value)}};
    for (int n = 0; n <= order; ++n) taut.set_coeff(n, horizontal_coefficient(n).eval(at_g));

    int mismatch = -1;
    for (int n = 0; n <= order && mismatch < 0; ++n)
        if (!(direct.coeff(n) == residue.coeff(n) && direct.coeff(n) == diag.coeff(n) &&
              direct.coeff(n) == taut.coeff(n)))
            mismatch = n;
    bool equal = mismatch < 0;

    if (json) {
        Json j;
        j["command"] = "diagonal-check";
        j["parameters"] = {{"g", g_value}, {"order", order}};
        j["status"] = equal ? "EQUAL" : "UNEQUAL";
        j["first_mismatch"] = mismatch;
        j["closed_form"] = coeff_strings(direct);
        j["residue"] = coeff_strings(residue);
        j["diagonal"] = coeff_strings(diag);
        j["tautological"] = coeff_strings(taut);
        print_json(out, j);
    } else {
        out << "status: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
        if (!equal) out << "first mismatch at q^" << mismatch << "\n";
        print_coefficients(out, "q", coeff_strings(direct));
    }
    return equal ? 0 : 1;
}

int cmd_vertical(std::ostream& out, bool json, const std::optional<SurfaceData>& s, long rank) {
    RingValue v = rank == 2 ? vertical_c2_2() : vertical_rank_r(rank);
    if (json) {
        Json j;
        j["command"] = "vertical";
        Json params = parameters_json(s);
        params["rank"] = rank;
        j["parameters"] = params;
        Json rv = ring_value_json(v, s);
        for (auto& [k, val] : rv.items()) j[k] = val;
        print_json(out, j);
    } else {
        out << ring_value_text(v, s) << "\n";
    }
    return 0;
}

int cmd_mixed(std::ostream& out, bool json, const std::optional<SurfaceData>& s) {
    RingValue first = mixed_s21(1, 1, 1);
    bool invariant = true;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                RingValue m = mixed_s21(i, j, k);
                invariant = invariant && m.bracket == first.bracket && m.norm == first.norm;
            }
    if (json) {
        Json j;
        j["command"] = "mixed";
        j["parameters"] = parameters_json(s);
        Json rv = ring_value_json(first, s);
        for (auto& [k, val] : rv.items()) j[k] = val;
        j["ijk_invariant"] = invariant;
        print_json(out, j);
    } else {
        out << ring_value_text(first, s) << "\n";
        out << "ijk sweep: " << (invariant ? "8/8 identical" : "MISMATCH") << "\n";
    }
    return invariant ? 0 : 1;
}

int cmd_monopole(std::ostream& out, bool json, const std::optional<SurfaceData>& s) {
    MonopoleSeries m = monopole_series_q3();
    SeriesPayload p;
    p.norm = record_at(m.norm, s);
    p.coeffs = s ? coeff_strings(eval_at(m.bracket, s->param_values())) : coeff_strings(m.bracket);
    if (json) {
        Json j;
        j["command"] = "monopole";
        Json params = parameters_json(s);
        params["order"] = 3;
        j["parameters"] = params;
        j["normalization"] = normalization_json(p.norm);
        j["coefficients"] = p.coeffs;
        Json comps = Json::array();
        for (const MonopoleComponent& c : m.components) {
            Json cj;
            cj["label"] = c.label;
            cj["power"] = c.power;
            cj["value"] = s ? c.coeff.eval(s->param_values()).str() : c.coeff.str();
            comps.push_back(cj);
        }
        j["components"] = comps;
        j["note"] = "components with c2(E) >= 4 are not computed; coefficients stop at q^3";
        print_json(out, j);
    } else {
        out << "normalization: " << p.norm.str() << "\n";
        print_coefficients(out, "q", p.coeffs);
        for (const MonopoleComponent& c : m.components)
            out << c.label << " (q^" << c.power
                << "): " << (s ? c.coeff.eval(s->param_values()).str() : c.coeff.str()) << "\n";
    }
    return 0;
}

int cmd_compare(std::ostream& out, bool json, const std::optional<SurfaceData>& s) {
    VWComparison r = s ? compare_vw(*s) : compare_vw();
    if (json) {
        Json j;
        j["command"] = "compare-vw";
        j["parameters"] = parameters_json(s);
        j["status"] = r.equal ? "EQUAL" : "UNEQUAL";
        j["first_mismatch"] = r.first_mismatch;
        j["monopole"] = r.monopole_coeffs;
        j["prediction"] = r.prediction_coeffs;
        j["two_exponent_equal"] = r.two_exponent_equal;
        j["sign_exponent_diff"] = r.sign_exponent_diff.str();
        j["vd_formula"] = r.vd_formula;
        j["vd_parity_matches"] = r.vd_parity_matches;
        print_json(out, j);
    } else {
        out << "status: " << (r.equal ? "EQUAL" : "UNEQUAL") << "\n";
        if (!r.equal) out << "first mismatch at q^" << r.first_mismatch << "\n";
        for (size_t n = 0; n < r.monopole_coeffs.size(); ++n)
            out << "monopole   q^" << n << ": " << r.monopole_coeffs[n] << "\n";
        for (size_t n = 0; n < r.prediction_coeffs.size(); ++n)
            out << "prediction q^" << n << ": " << r.prediction_coeffs[n] << "\n";
        out << "two-exponents equal: " << (r.two_exponent_equal ? "yes" : "no") << "\n";
        out << "residual sign exponent: " << r.sign_exponent_diff.str() << "\n";
        out << "vd: " << r.vd_formula << "\n";
        out << "vd parity matches residual sign: " << (r.vd_parity_matches ? "yes" : "no")
            << "\n";
    }
    return r.equal ? 0 : 1;
}

int cmd_euler_series(std::ostream& out, bool json, const std::optional<SurfaceData>& s,
                     std::optional<long> e_value, int order) {
    long e;
    if (e_value)
        e = *e_value;
    else if (s)
        e = s->c2;
    else
        throw std::invalid_argument("euler-series: need --e or a surface");
    QSeries series = euler_char_series(e, order);
    if (json) {
        Json j;
        j["command"] = "euler-series";
        Json params = parameters_json(s);
        params["e"] = e;
        params["order"] = order;
        j["parameters"] = params;
        j["shift"] = series.shift().str();
        j["coefficients"] = coeff_strings(series);
        print_json(out, j);
    } else {
        out << "shift: q^(" << series.shift().str() << ")\n";
        print_coefficients(out, "q", coeff_strings(series));
    }
    return 0;
}

int cmd_selftest(std::ostream& out, bool json) {
    std::vector<CriterionResult> results = run_acceptance();
    if (json) {
        Json j;
        j["command"] = "selftest";
        j["parameters"] = Json::object();
        Json arr = Json::array();
        bool all = true;
        for (const CriterionResult& r : results) {
            Json rj;
            rj["id"] = r.id;
            rj["label"] = r.label;
            rj["pass"] = r.pass;
            if (!r.pass) rj["detail"] = r.detail;
            arr.push_back(rj);
            all = all && r.pass;
        }
        j["criteria"] = arr;
        j["all_pass"] = all;
        print_json(out, j);
        return all ? 0 : 1;
    }
    return report_acceptance(results, out) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating-series engine for rank-2 monopole-branch "
                 "Vafa-Witten invariants of surfaces with positive canonical bundle"};
    app.name("vwcalc");
    app.require_subcommand(1);

    int exit_code = 0;
    bool json = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable output"); };

    // horizontal
    {
        auto* cmd = app.add_subcommand("horizontal", "horizontal-term coefficients h_0..h_N");
        auto order = std::make_shared<int>(12);
        auto surf = std::make_shared<SurfaceOpts>();
        cmd->add_option("--order", *order, "truncation order")->check(CLI::NonNegativeNumber);
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, order, surf] {
            exit_code = cmd_horizontal(out, json, surf->resolve(), *order);
        });
    }
    // closed-form
    {
        auto* cmd = app.add_subcommand("closed-form", "closed-form expansion of the horizontal series");
        auto order = std::make_shared<int>(12);
        auto gval = std::make_shared<long>(0);
        auto surf = std::make_shared<SurfaceOpts>();
        cmd->add_option("--order", *order, "truncation order")->check(CLI::NonNegativeNumber);
        auto* gopt = cmd->add_option("--g", *gval, "integer genus");
        surf->attach(cmd);
        gopt->excludes(surf->preset_opt);
        add_json(cmd);
        cmd->callback([&, order, gval, surf, gopt] {
            std::optional<long> g;
            if (gopt->count() > 0) g = *gval;
            exit_code = cmd_closed_form(out, json, surf->resolve(), *order, g);
        });
    }
    // diagonal-check
    {
        auto* cmd = app.add_subcommand(
            "diagonal-check", "four-way agreement of the horizontal series at integer genus");
        auto order = std::make_shared<int>(10);
        auto gval = std::make_shared<long>(6);
        cmd->add_option("--order", *order, "truncation order")->check(CLI::NonNegativeNumber);
        cmd->add_option("--g", *gval, "integer genus >= 2");
        add_json(cmd);
        cmd->callback([&, order, gval] {
            exit_code = cmd_diagonal_check(out, json, *gval, *order);
        });
    }
    // vertical
    {
        auto* cmd = app.add_subcommand("vertical", "vertical fixed-locus term");
        auto rank = std::make_shared<long>(2);
        auto surf = std::make_shared<SurfaceOpts>();
        cmd->add_option("--rank", *rank, "sheaf rank r >= 2");
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, rank, surf] {
            exit_code = cmd_vertical(out, json, surf->resolve(), *rank);
        });
    }
    // mixed
    {
        auto* cmd = app.add_subcommand("mixed", "mixed fixed-locus term over S^[2,1]");
        auto surf = std::make_shared<SurfaceOpts>();
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, surf] { exit_code = cmd_mixed(out, json, surf->resolve()); });
    }
    // monopole
    {
        auto* cmd = app.add_subcommand("monopole", "assembled monopole-branch series through q^3");
        auto surf = std::make_shared<SurfaceOpts>();
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, surf] { exit_code = cmd_monopole(out, json, surf->resolve()); });
    }
    // compare-vw
    {
        auto* cmd = app.add_subcommand("compare-vw",
                                       "compare the monopole series against the prediction");
        auto surf = std::make_shared<SurfaceOpts>();
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, surf] { exit_code = cmd_compare(out, json, surf->resolve()); });
    }
    // euler-series
    {
        auto* cmd = app.add_subcommand("euler-series",
                                       "Euler-characteristic series of the nested tower");
        auto order = std::make_shared<int>(12);
        auto eval = std::make_shared<long>(0);
        auto surf = std::make_shared<SurfaceOpts>();
        cmd->add_option("--order", *order, "truncation order")->check(CLI::NonNegativeNumber);
        auto* eopt = cmd->add_option("--e", *eval, "Euler number e(S)");
        surf->attach(cmd);
        add_json(cmd);
        cmd->callback([&, order, eval, surf, eopt] {
            std::optional<long> e;
            if (eopt->count() > 0) e = *eval;
            exit_code = cmd_euler_series(out, json, surf->resolve(), e, *order);
        });
    }
    // selftest
    {
        auto* cmd = app.add_subcommand("selftest", "run the full acceptance suite");
        add_json(cmd);
        cmd->callback([&] { exit_code = cmd_selftest(out, json); });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    return exit_code;
}

}  // namespace vw::cli
