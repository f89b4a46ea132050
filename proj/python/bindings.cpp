#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "concord/classical.hpp"
#include "concord/cover.hpp"
#include "concord/json_io.hpp"
#include "concord/knots.hpp"
#include "concord/obstruct.hpp"
#include "concord/signature.hpp"
#include "concord/upsilon.hpp"

namespace py = pybind11;
using namespace concord;
using nlohmann::json;

namespace {

// Structured results cross the boundary as JSON strings; the python package
// decodes them into plain dicts.
std::string eval_json(const std::string& expr, const std::string& which) {
    const KnotPtr e = parse(expr);
    json j;
    if (which == "alexander")
        j = json_of_eval(alexander(e), [](const LaurentPoly& p) { return json_of(p); });
    else if (which == "tau")
        j = json_of_eval(tau(e), [](long long v) { return json(v); });
    else if (which == "genus")
        j = json_of_eval(genus3(e), [](const Genus& g) {
            return json{{"value", g.value}, {"exact", g.exact}};
        });
    else
        j = json_of_eval(upsilon(e), [](const PLFunction& f) { return json_of(f); });
    return j.dump();
}

long long tau_value(const std::string& expr) {
    const auto r = tau(parse(expr));
    if (!r.ok()) throw EvaluatorUnknown(r.unknown_reason);
    return *r.value;
}

std::string upsilon_at(const std::string& expr, const std::string& t) {
    const auto r = upsilon(parse(expr));
    if (!r.ok()) throw EvaluatorUnknown(r.unknown_reason);
    return to_string((*r.value)(parse_rational(t)));
}

std::string jumps_json(long long r, long long s) {
    return json_of(torus_jumps(r, s)).dump();
}

int sigma(long long r, long long s, const std::string& t) {
    return sigma_at(torus_jumps(r, s), parse_rational(t));
}

int sigma_oracle_py(long long r, long long s, const std::string& t) {
    return sigma_oracle(braid_seifert_matrix(r, s), parse_rational(t));
}

std::string obstruct_json(const std::string& engine, const json& inputs) {
    json cert;
    cert["engine"] = engine;
    cert["inputs"] = inputs;
    // reuse the replay dispatcher's input decoding by running engines directly
    if (engine == "bing")
        return bing_tau(parse(inputs.at("j1").get<std::string>()),
                        parse(inputs.at("j2").get<std::string>()))
            .to_json()
            .dump();
    if (engine == "rp3-null")
        return rp3_null(parse(inputs.at("j1").get<std::string>()),
                        parse(inputs.at("j2").get<std::string>()))
            .to_json()
            .dump();
    if (engine == "lens-generic")
        return lens_generic(
                   LensSpace(inputs.at("p").get<long long>(), inputs.at("q").get<long long>()),
                   inputs.at("l").get<long long>())
            .to_json()
            .dump();
    if (engine == "lens-order2")
        return lens_order2(inputs.at("n").get<long long>(), inputs.at("q").get<long long>(),
                           parse(inputs.at("j").get<std::string>()))
            .to_json()
            .dump();
    if (engine == "rp3-order2")
        return rp3_order2(parse(inputs.at("j").get<std::string>())).to_json().dump();
    if (engine == "topological")
        return topological(
                   LensSpace(inputs.at("p").get<long long>(), inputs.at("q").get<long long>()),
                   inputs.at("l").get<long long>(), inputs.at("n1").get<long long>(),
                   inputs.at("n2").get<long long>())
            .to_json()
            .dump();
    throw BadParameters("unknown engine: " + engine);
}

bool replay_certificate(const std::string& certificate) {
    return replay(json::parse(certificate));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact knot concordance invariants and obstruction certificates";

    py::register_exception<Error>(m, "ConcordError");

    m.def("parse_expr", [](const std::string& text) { return render(parse(text)); },
          "parse and normalize an expression, returning its canonical rendering");
    m.def("normalize_expr",
          [](const std::string& text) { return render(normalize(parse(text))); });
    m.def("eval_json", &eval_json, py::arg("expr"), py::arg("which"));
    m.def("tau", &tau_value, py::arg("expr"));
    m.def("upsilon_at", &upsilon_at, py::arg("expr"), py::arg("t"));
    m.def("jumps_json", &jumps_json, py::arg("r"), py::arg("s"));
    m.def("sigma", &sigma, py::arg("r"), py::arg("s"), py::arg("t"));
    m.def("sigma_oracle", &sigma_oracle_py, py::arg("r"), py::arg("s"), py::arg("t"));
    m.def("obstruct_json", [](const std::string& engine, const std::string& inputs) {
        return obstruct_json(engine, json::parse(inputs));
    });
    m.def("replay_certificate", &replay_certificate, py::arg("certificate"));
}
