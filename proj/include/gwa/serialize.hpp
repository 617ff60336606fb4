#pragma once

// JSON serialization for elements, configurations and morphism files.
//
//   PBW   {"basis":"PBW","config":{...},"terms":[{"coeff":"...","exp":[l,m,n,o,r]}]}
//   GWA   {"basis":"GWA","config":{...},"terms":[{"coeff":"...","exp":[a,b,c,d]}]}
//   LOC   {"basis":"LOC","config":{...},"terms":[{"coeff":"...","exp":[a,b,c,d]}]}
//   TORUS {"basis":"TORUS","matrix":[[...]],"config":{...},"terms":[...]}
//
// GenMap files:
//   {"domain":{"kind":"A","params":["p","q","l","u"],"config":{...}},
//    "codomain":{...}, "images":{"x":<element>,...}, "verified":false}
//
// Terms are listed in ascending graded-lex order; coefficients use the scalar
// text grammar.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwa/morphisms.hpp"
#include "gwa/parse.hpp"

namespace gwa {

using Json = nlohmann::json;

// --- configs ----------------------------------------------------------------

inline Json to_json(const ParamConfig& cfg) {
    if (cfg.is_generic()) return Json{{"mode", "generic"}};
    Json values;
    for (int i = 0; i < 4; ++i) {
        std::ostringstream os;
        os << cfg.value(i);
        values[param_names()[static_cast<size_t>(i)]] = os.str();
    }
    return Json{{"mode", "specialized"}, {"values", values}};
}

inline Rational rational_from_string(const std::string& text) {
    const ParamScalar s = parse_scalar(text);
    if (!s.is_constant()) throw Error("expected a rational constant, got " + text);
    return s.constant_value();
}

inline ParamConfig config_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mode")) throw Error("config object must carry a mode");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "generic") return ParamConfig::generic();
    if (mode != "specialized") throw Error("unknown config mode: " + mode);
    std::array<Rational, 4> vals{Rational(1), Rational(1), Rational(1), Rational(1)};
    const Json& values = j.at("values");
    for (int i = 0; i < 4; ++i) {
        const char* name = param_names()[static_cast<size_t>(i)];
        if (values.contains(name))
            vals[static_cast<size_t>(i)] = rational_from_string(values.at(name).get<std::string>());
    }
    return ParamConfig::specialized(vals);
}

// --- elements ---------------------------------------------------------------

inline Json to_json(const PbwElement& e) {
    Json terms = Json::array();
    for (const auto& [mono, c] : e.terms())
        terms.push_back(Json{{"coeff", c.to_string()}, {"exp", {mono.l, mono.m, mono.n, mono.o, mono.r}}});
    return Json{{"basis", "PBW"}, {"config", to_json(e.algebra().config())}, {"terms", terms}};
}

inline Json to_json(const GwaElement& e) {
    Json terms = Json::array();
    for (const auto& [mono, c] : e.terms())
        terms.push_back(Json{{"coeff", c.to_string()}, {"exp", {mono.a, mono.b, mono.c, mono.d}}});
    return Json{{"basis", e.basis() == ZBasis::Loc ? "LOC" : "GWA"},
                {"config", to_json(e.algebra().config())},
                {"terms", terms}};
}

inline Json to_json(const TorusElement& e) {
    Json matrix = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(e.context().matrix().at(i, j).to_string());
        matrix.push_back(row);
    }
    Json terms = Json::array();
    for (const auto& [exp, c] : e.terms())
        terms.push_back(Json{{"coeff", c.to_string()}, {"exp", {exp[0], exp[1], exp[2], exp[3]}}});
    return Json{{"basis", "TORUS"},
                {"matrix", matrix},
                {"config", to_json(e.context().config())},
                {"terms", terms}};
}

inline PbwElement pbw_from_json(const Json& j, const Algebra& alg) {
    if (j.at("basis").get<std::string>() != "PBW") throw Error("expected a PBW element");
    PbwElement e = PbwElement::zero(alg);
    for (const Json& term : j.at("terms")) {
        const auto exp = term.at("exp");
        PbwMonomial mono{exp.at(0).get<int>(), exp.at(1).get<int>(), exp.at(2).get<int>(),
                         exp.at(3).get<int>(), exp.size() > 4 ? exp.at(4).get<int>() : 0};
        e.add_term(mono, parse_scalar(term.at("coeff").get<std::string>()));
    }
    return e;
}

inline GwaElement zbasis_from_json(const Json& j, const Algebra& alg) {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "GWA" && basis != "LOC") throw Error("expected a GWA or LOC element");
    const ZBasis b = basis == "LOC" ? ZBasis::Loc : ZBasis::Gwa;
    GwaElement e(alg, b);
    for (const Json& term : j.at("terms")) {
        const auto exp = term.at("exp");
        GwaMonomial mono{exp.at(0).get<int>(), exp.at(1).get<int>(), exp.at(2).get<int>(),
                         exp.at(3).get<int>()};
        e.add_term(mono, parse_scalar(term.at("coeff").get<std::string>()));
    }
    return e;
}

inline TorusElement torus_from_json(const Json& j, const Torus& ctx) {
    if (j.at("basis").get<std::string>() != "TORUS") throw Error("expected a torus element");
    TorusElement e = TorusElement::zero(ctx);
    for (const Json& term : j.at("terms")) {
        const auto exp = term.at("exp");
        e.add_term(TorusExp{exp.at(0).get<int>(), exp.at(1).get<int>(), exp.at(2).get<int>(),
                            exp.at(3).get<int>()},
                   parse_scalar(term.at("coeff").get<std::string>()));
    }
    return e;
}

// --- morphism files ----------------------------------------------------------

inline Json to_json(const Algebra& alg) {
    return Json{{"kind", kind_name(alg.kind())},
                {"params",
                 {alg.p().to_string(), alg.q().to_string(), alg.lam().to_string(), alg.mu().to_string()}},
                {"config", to_json(alg.config())}};
}

inline Algebra algebra_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    AlgebraKind k;
    if (kind == "A") k = AlgebraKind::A;
    else if (kind == "A-w") k = AlgebraKind::AW;
    else if (kind == "A-loc") k = AlgebraKind::ALoc;
    else throw Error("unknown algebra kind: " + kind);

    AlgebraParams params;
    if (j.contains("params")) {
        const Json& p = j.at("params");
        params.p = parse_scalar(p.at(0).get<std::string>());
        params.q = parse_scalar(p.at(1).get<std::string>());
        params.lam = parse_scalar(p.at(2).get<std::string>());
        params.mu = parse_scalar(p.at(3).get<std::string>());
    }
    const ParamConfig cfg = j.contains("config") ? config_from_json(j.at("config")) : ParamConfig::generic();
    return Algebra(k, params, cfg);
}

inline Json to_json(const GenMap& f) {
    Json images;
    for (const auto& [g, img] : f.images)
        images[letter_name(g)] = std::visit([](const auto& e) { return to_json(e); }, img);
    return Json{{"domain", to_json(f.domain)},
                {"codomain", to_json(f.codomain)},
                {"images", images},
                {"verified", f.verified}};
}

inline GenMap genmap_from_json(const Json& j) {
    const Algebra domain = algebra_from_json(j.at("domain"));
    const Algebra codomain =
        j.contains("codomain") ? algebra_from_json(j.at("codomain")) : domain;
    GenMap f;
    f.domain = domain;
    f.codomain = codomain;
    const Json& images = j.at("images");
    for (GenLetter g : domain_generators(domain.kind())) {
        const char* name = letter_name(g);
        if (!images.contains(name)) throw Error(std::string("missing image for generator ") + name);
        const Json& img = images.at(name);
        if (codomain.kind() == AlgebraKind::ALoc) {
            GwaElement e = zbasis_from_json(img, codomain);
            if (e.basis() != ZBasis::Loc) e = to_loc(e);
            f.images.emplace(g, AnyElement(std::move(e)));
        } else {
            f.images.emplace(g, AnyElement(pbw_from_json(img, codomain)));
        }
    }
    // the verified flag on disk is advisory; maps must be re-verified
    return f;
}

// --- CLI payloads -------------------------------------------------------------

inline EndoData endodata_from_json(const Json& j) {
    EndoData d;
    if (j.contains("alpha")) d.alpha = parse_scalar(j.at("alpha").get<std::string>());
    if (j.contains("beta")) d.beta = parse_scalar(j.at("beta").get<std::string>());
    if (j.contains("gamma")) d.gamma = parse_scalar(j.at("gamma").get<std::string>());
    auto read = [&j](const char* name, int& slot) {
        if (j.contains(name)) slot = j.at(name).get<int>();
    };
    read("i", d.i);
    read("j", d.j);
    read("k", d.k);
    read("m", d.m);
    read("n", d.n);
    read("c", d.c);
    read("d", d.d);
    read("e", d.e);
    read("f", d.f);
    return d;
}

inline AffineCandidate affine_from_json(const Json& j) {
    AffineCandidate cand;
    const Json& m = j.at("matrix");
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            cand.matrix[r][c] = parse_scalar(m.at(r).at(c).get<std::string>());
    for (auto& c : cand.constants) c = ParamScalar(0);
    if (j.contains("constants"))
        for (size_t r = 0; r < 4; ++r)
            cand.constants[r] = parse_scalar(j.at("constants").at(r).get<std::string>());
    return cand;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace gwa
