#include "concord/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "concord/classical.hpp"
#include "concord/cover.hpp"
#include "concord/json_io.hpp"
#include "concord/knots.hpp"
#include "concord/obstruct.hpp"
#include "concord/signature.hpp"
#include "concord/upsilon.hpp"

namespace concord::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInconclusive = 1;
constexpr int kUserError = 2;
constexpr int kInternalError = 3;

// Callbacks run while CLI11 is still parsing, so the format flags are read
// through pointers at emission time.
struct Output {
    const std::string* format = nullptr;
    const bool* trace_flag = nullptr;
    std::ostream* out = nullptr;

    void emit(const std::string& command, const json& inputs, const json& result,
              const std::vector<std::string>& trace, const std::string& text) const {
        if (*format == "json") {
            json envelope;
            envelope["command"] = command;
            envelope["inputs"] = inputs;
            envelope["result"] = result;
            envelope["trace"] = trace;
            *out << envelope.dump(2) << "\n";
        } else {
            *out << text << "\n";
            if (*trace_flag)
                for (const auto& line : trace) *out << "  " << line << "\n";
        }
    }
};

std::string plf_table(const PLFunction& f) {
    std::string s;
    for (const auto& pt : f.breakpoints())
        s += to_string(pt.t) + "\t" + to_string(pt.value) + "\n";
    if (!s.empty()) s.pop_back();
    return s;
}

int emit_certificate(const Output& output, const std::string& command, const Certificate& cert) {
    output.emit(command, cert.inputs, cert.to_json(), cert.trace,
                cert.conclusion() + (cert.distinguished ? "" : ": " + cert.reason));
    return cert.distinguished ? kOk : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact knot concordance invariants, covering-link calculus, and "
                 "obstruction certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    bool trace = false;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--trace", trace, "include the derivation trace");

    Output output;
    output.format = &format;
    output.trace_flag = &trace;
    output.out = &out;

    int exit_code = kOk;

    // ---- evaluators ------------------------------------------------------
    std::string expr_text;
    auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial of an expression");
    alexander_cmd->add_option("expr", expr_text, "knot expression")->required();
    alexander_cmd->callback([&] {
        const auto e = parse(expr_text);
        const auto result = alexander(e);
        output.emit("alexander", {{"expr", render(e)}}, json_of_eval(result, [](const LaurentPoly& p) {
                        return json_of(p);
                    }),
                    result.derivation, result.value->to_string());
    });

    auto* tau_cmd = app.add_subcommand("tau", "tau invariant of an expression");
    tau_cmd->add_option("expr", expr_text, "knot expression")->required();
    tau_cmd->callback([&] {
        const auto e = parse(expr_text);
        const auto result = tau(e);
        output.emit("tau", {{"expr", render(e)}},
                    json_of_eval(result, [](long long v) { return json(v); }), result.derivation,
                    result.ok() ? std::to_string(*result.value)
                                : "unknown: " + result.unknown_reason);
        if (!result.ok()) exit_code = kInconclusive;
    });

    auto* genus_cmd = app.add_subcommand("genus", "Seifert genus of an expression");
    genus_cmd->add_option("expr", expr_text, "knot expression")->required();
    genus_cmd->callback([&] {
        const auto e = parse(expr_text);
        const auto result = genus3(e);
        output.emit("genus", {{"expr", render(e)}}, json_of_eval(result, [](const Genus& g) {
                        return json{{"value", g.value}, {"exact", g.exact}};
                    }),
                    result.derivation,
                    result.ok() ? std::to_string(result.value->value) +
                                      (result.value->exact ? "" : " (upper bound)")
                                : "unknown: " + result.unknown_reason);
        if (!result.ok()) exit_code = kInconclusive;
    });

    std::string at_text;
    std::vector<std::string> slope_on;
    bool dump_plf = false;
    auto* upsilon_cmd = app.add_subcommand("upsilon", "upsilon invariant of an expression");
    upsilon_cmd->add_option("expr", expr_text, "knot expression")->required();
    upsilon_cmd->add_option("--at", at_text, "evaluate at a rational t in [0,2]");
    upsilon_cmd->add_option("--slope-on", slope_on, "slopes on the open interval (a,b)")
        ->expected(2);
    upsilon_cmd->add_flag("--dump-plf", dump_plf, "print the breakpoint table");
    upsilon_cmd->callback([&] {
        const auto e = parse(expr_text);
        const auto result = upsilon(e);
        if (!result.ok()) {
            output.emit("upsilon", {{"expr", render(e)}},
                        json_of_eval(result, [](const PLFunction&) { return json(); }),
                        result.derivation, "unknown: " + result.unknown_reason);
            exit_code = kInconclusive;
            return;
        }
        const PLFunction& f = *result.value;
        json inputs{{"expr", render(e)}};
        json payload = json_of(f);
        std::string text = f.to_string();
        if (!at_text.empty()) {
            const Rational t = parse_rational(at_text);
            inputs["at"] = to_string(t);
            payload["value_at"] = to_string(f(t));
            text = to_string(f(t));
        }
        if (!slope_on.empty()) {
            const Rational a = parse_rational(slope_on[0]), b = parse_rational(slope_on[1]);
            inputs["slope_on"] = {to_string(a), to_string(b)};
            const auto slopes = plf_slopes_on(f, a, b);
            json slope_json = json::array();
            std::string slope_text;
            for (const auto& sl : slopes) {
                slope_json.push_back(to_string(sl));
                slope_text += (slope_text.empty() ? "" : " ") + to_string(sl);
            }
            payload["slopes"] = slope_json;
            text = slope_text;
        }
        if (dump_plf) text = plf_table(f);
        output.emit("upsilon", inputs, payload, result.derivation, text);
    });

    // ---- signatures ------------------------------------------------------
    long long arg_r = 0, arg_s = 0;
    std::string t_text;
    auto* jumps_cmd = app.add_subcommand("jumps", "signature jump spectrum of a torus knot");
    jumps_cmd->add_option("r", arg_r)->required();
    jumps_cmd->add_option("s", arg_s)->required();
    jumps_cmd->callback([&] {
        const auto spectrum = torus_jumps(arg_r, arg_s);
        std::string text;
        for (const auto& [t, jump] : spectrum.entries)
            text += to_string(t) + (jump > 0 ? " +2\n" : " -2\n");
        if (!text.empty()) text.pop_back();
        output.emit("jumps", {{"r", arg_r}, {"s", arg_s}}, json_of(spectrum), {}, text);
    });

    auto* sigma_cmd = app.add_subcommand("sigma", "cumulative signature from the jump spectrum");
    sigma_cmd->add_option("r", arg_r)->required();
    sigma_cmd->add_option("s", arg_s)->required();
    sigma_cmd->add_option("--t", t_text, "rational in (0,1)")->required();
    sigma_cmd->callback([&] {
        const Rational t = parse_rational(t_text);
        const int value = sigma_at(torus_jumps(arg_r, arg_s), t);
        output.emit("sigma", {{"r", arg_r}, {"s", arg_s}, {"t", to_string(t)}}, json(value), {},
                    std::to_string(value));
    });

    auto* oracle_cmd =
        app.add_subcommand("sigma-oracle", "signature from the braid Seifert matrix");
    oracle_cmd->add_option("r", arg_r)->required();
    oracle_cmd->add_option("s", arg_s)->required();
    oracle_cmd->add_option("--t", t_text, "rational in (0,1)")->required();
    oracle_cmd->callback([&] {
        const Rational t = parse_rational(t_text);
        const int value = sigma_oracle(braid_seifert_matrix(arg_r, arg_s), t);
        output.emit("sigma-oracle", {{"r", arg_r}, {"s", arg_s}, {"t", to_string(t)}}, json(value),
                    {}, std::to_string(value));
    });

    // ---- covering links --------------------------------------------------
    std::string family_tag, companion_text = "U";
    long long arg_p = 0, arg_q = 0, arg_l = 1, arg_n = 0;
    auto* cover_cmd = app.add_subcommand("cover", "symbolic covering-link description");
    cover_cmd->add_option("--family", family_tag, "torus|generic|order2|rp3-null|rp3-order2")
        ->required()
        ->check(CLI::IsMember({"torus", "generic", "order2", "rp3-null", "rp3-order2"}));
    cover_cmd->add_option("--p", arg_p)->required();
    cover_cmd->add_option("--q", arg_q)->required();
    cover_cmd->add_option("--l", arg_l, "strand count");
    cover_cmd->add_option("--n", arg_n, "longitude count (torus family)");
    cover_cmd->add_option("--companion", companion_text, "companion expression");
    cover_cmd->callback([&] {
        const LensSpace space(arg_p, arg_q);
        Family family = Family::Torus;
        long long strands = arg_l;
        if (family_tag == "generic") family = Family::Generic;
        if (family_tag == "order2") {
            family = Family::Order2;
            strands = arg_p / 2;
        }
        if (family_tag == "rp3-null") {
            family = Family::RP3Null;
            strands = 1;
        }
        if (family_tag == "rp3-order2") {
            family = Family::RP3Order2;
            strands = 3;
        }
        const PatternKnot pattern(space, strands, parse(companion_text), family,
                                  family == Family::Order2 ? arg_p / 2 : arg_n);
        const LiftDescription description = lift(pattern);
        std::string text = std::to_string(description.component_count) + " component(s), degree " +
                           std::to_string(description.degree);
        for (const auto& c : description.components) text += "\n  " + render(c);
        output.emit("cover",
                    {{"family", family_tag},
                     {"p", arg_p},
                     {"q", arg_q},
                     {"l", strands},
                     {"n", arg_n},
                     {"companion", companion_text}},
                    json_of(description), description.notes, text);
    });

    // ---- obstruction engines ----------------------------------------------
    auto* obstruct_cmd = app.add_subcommand("obstruct", "run an obstruction engine");
    obstruct_cmd->require_subcommand(1);
    std::string j1_text, j2_text, j_text = "U";

    auto* bing_cmd = obstruct_cmd->add_subcommand("bing", "tau obstruction for doubled patterns");
    bing_cmd->add_option("--j1", j1_text)->required();
    bing_cmd->add_option("--j2", j2_text)->required();
    bing_cmd->callback([&] {
        exit_code = emit_certificate(output, "obstruct bing", bing_tau(parse(j1_text), parse(j2_text)));
    });

    auto* rp3n_cmd = obstruct_cmd->add_subcommand("rp3-null", "null-homotopic class in L(2,1)");
    rp3n_cmd->add_option("--j1", j1_text)->required();
    rp3n_cmd->add_option("--j2", j2_text)->required();
    rp3n_cmd->callback([&] {
        exit_code =
            emit_certificate(output, "obstruct rp3-null", rp3_null(parse(j1_text), parse(j2_text)));
    });

    auto* lensg_cmd = obstruct_cmd->add_subcommand("lens-generic", "classes of order not 0 or 2");
    lensg_cmd->add_option("--p", arg_p)->required();
    lensg_cmd->add_option("--q", arg_q)->required();
    lensg_cmd->add_option("--l", arg_l)->required();
    lensg_cmd->callback([&] {
        exit_code = emit_certificate(output, "obstruct lens-generic",
                                     lens_generic(LensSpace(arg_p, arg_q), arg_l));
    });

    auto* lens2_cmd = obstruct_cmd->add_subcommand("lens-order2", "order-2 class in L(2n,q)");
    lens2_cmd->add_option("--n", arg_n)->required();
    lens2_cmd->add_option("--q", arg_q)->required();
    lens2_cmd->add_option("--j", j_text)->required();
    lens2_cmd->callback([&] {
        exit_code = emit_certificate(output, "obstruct lens-order2",
                                     lens_order2(arg_n, arg_q, parse(j_text)));
    });

    auto* rp32_cmd = obstruct_cmd->add_subcommand("rp3-order2", "order-2 class in L(2,1)");
    rp32_cmd->add_option("--j", j_text)->required();
    rp32_cmd->callback([&] {
        exit_code = emit_certificate(output, "obstruct rp3-order2", rp3_order2(parse(j_text)));
    });

    auto* topo_cmd = obstruct_cmd->add_subcommand("topological", "signature-jump separation");
    topo_cmd->add_option("--p", arg_p)->required();
    topo_cmd->add_option("--q", arg_q)->required();
    topo_cmd->add_option("--l", arg_l)->required();
    long long arg_n1 = 0, arg_n2 = 0;
    topo_cmd->add_option("--n1", arg_n1)->required();
    topo_cmd->add_option("--n2", arg_n2)->required();
    topo_cmd->callback([&] {
        exit_code = emit_certificate(output, "obstruct topological",
                                     topological(LensSpace(arg_p, arg_q), arg_l, arg_n1, arg_n2));
    });

    // ---- sweep -------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "batch certificates");
    auto* sweep_topo = sweep_cmd->add_subcommand("topological", "all pairs n1 < n2 <= n-max");
    long long n_max = 0;
    sweep_topo->add_option("--p", arg_p)->required();
    sweep_topo->add_option("--q", arg_q)->required();
    sweep_topo->add_option("--l", arg_l)->required();
    sweep_topo->add_option("--n-max", n_max)->required();
    sweep_topo->callback([&] {
        const LensSpace space(arg_p, arg_q);
        json all = json::array();
        bool all_distinguished = true;
        std::string text;
        for (long long n1 = 1; n1 <= n_max; ++n1) {
            if (std::gcd(arg_l, n1) != 1) continue;
            for (long long n2 = n1 + 1; n2 <= n_max; ++n2) {
                if (std::gcd(arg_l, n2) != 1) continue;
                const Certificate cert = topological(space, arg_l, n1, n2);
                all.push_back(cert.to_json());
                all_distinguished = all_distinguished && cert.distinguished;
                text += "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " " +
                        cert.conclusion() + "\n";
            }
        }
        if (!text.empty()) text.pop_back();
        output.emit("sweep topological",
                    {{"p", arg_p}, {"q", arg_q}, {"l", arg_l}, {"n_max", n_max}}, all, {}, text);
        exit_code = all_distinguished ? kOk : kInconclusive;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUserError;
    } catch (const EvaluatorUnknown& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const Error& e) {
        err << "error (" << e.kind() << "): " << e.what() << "\n";
        return e.fault() == Fault::Internal ? kInternalError : kUserError;
    }

    return exit_code;
}

}  // namespace concord::cli
