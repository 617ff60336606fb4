// Command-line front end: normal forms, basis conversions, unit inversion,
// ideal membership, center scans, morphism verification, the constructive
// inversion, affine classification, and the acceptance suite runner.
//
// Exit codes: 0 for a successful verdict, 1 for a negative verdict
// (verification failed, non-member, suite failure), 2 for usage, parse or
// input errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwa/serialize.hpp"
#include "gwa/suite.hpp"

namespace {

using namespace gwa;

struct GlobalOpts {
    std::string params = "generic";
    std::string algebra = "A";
    std::string output = "text";
};

ParamConfig parse_params_flag(const std::string& text) {
    if (text == "generic") return ParamConfig::generic();
    std::array<Rational, 4> vals{Rational(1), Rational(1), Rational(1), Rational(1)};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("bad parameter assignment '" + item + "' (expected k=v)");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        int idx = -1;
        for (int i = 0; i < 4; ++i)
            if (key == param_names()[static_cast<size_t>(i)]) idx = i;
        if (idx < 0) throw Error("unknown parameter '" + key + "' (use p, q, l, u)");
        vals[static_cast<size_t>(idx)] = rational_from_string(val);
    }
    return ParamConfig::specialized(vals);
}

Algebra algebra_for(const GlobalOpts& opts) {
    const ParamConfig cfg = parse_params_flag(opts.params);
    if (opts.algebra == "A") return Algebra::plain(cfg);
    if (opts.algebra == "A-w") return Algebra::poly_ext(cfg);
    if (opts.algebra == "A-loc") return Algebra::localized(cfg);
    throw Error("unknown algebra selector '" + opts.algebra + "' (use A, A-w, A-loc or torus)");
}

bool json_output(const GlobalOpts& opts) { return opts.output == "json"; }

void print_element(const GlobalOpts& opts, const PbwElement& e) {
    if (json_output(opts)) std::cout << to_json(e).dump(2) << "\n";
    else std::cout << e.to_string() << "\n";
}
void print_element(const GlobalOpts& opts, const GwaElement& e) {
    if (json_output(opts)) std::cout << to_json(e).dump(2) << "\n";
    else std::cout << e.to_string() << "\n";
}
void print_element(const GlobalOpts& opts, const TorusElement& e) {
    if (json_output(opts)) {
        std::cout << to_json(e).dump(2) << "\n";
        return;
    }
    if (e.is_zero()) {
        std::cout << "0\n";
        return;
    }
    std::string out;
    const char* names[4] = {"z", "y", "s", "t"};
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            const int k = it->first[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (k != 1) mono += "^" + std::to_string(k);
        }
        const std::string cs = it->second.to_string();
        if (mono.empty()) out += cs;
        else if (it->second.is_one()) out += mono;
        else out += "(" + cs + ")*" + mono;
    }
    std::cout << out << "\n";
}

// evaluate one expression in the selected algebra and print it
int eval_command(const GlobalOpts& opts, const std::string& expr,
                 const std::string& second = "", int mode = 0) {
    // mode 0: nf, 1: mul, 2: commutator
    if (opts.algebra == "torus") {
        const Torus ctx = Torus::standard(Algebra::localized(parse_params_flag(opts.params)));
        TorusElement a = parse_torus(ctx, expr);
        if (mode == 1) a = a * parse_torus(ctx, second);
        if (mode == 2) {
            const TorusElement b = parse_torus(ctx, second);
            a = a * b - b * a;
        }
        print_element(opts, a);
        return 0;
    }
    const Algebra alg = algebra_for(opts);
    if (alg.kind() == AlgebraKind::ALoc) {
        LocElement a = parse_loc(alg, expr);
        if (mode == 1) a = loc_multiply(a, parse_loc(alg, second));
        if (mode == 2) {
            const LocElement b = parse_loc(alg, second);
            a = a * b - b * a;
        }
        print_element(opts, a);
        return 0;
    }
    PbwElement a = parse_pbw(alg, expr);
    if (mode == 1) a = a * parse_pbw(alg, second);
    if (mode == 2) a = commutator(a, parse_pbw(alg, second));
    print_element(opts, a);
    return 0;
}

int cmd_verify_morphism(const GlobalOpts& opts, const std::string& path) {
    const GenMap raw = genmap_from_json(load_json_file(path));
    const VerifyResult vr = verify_relations(raw);
    if (json_output(opts)) {
        Json failures = Json::array();
        for (const auto& f : vr.failures)
            failures.push_back(Json{{"relation", f.relation},
                                    {"residual", std::visit([](const auto& e) { return to_json(e); }, f.value)}});
        std::cout << Json{{"verified", vr.ok}, {"failures", failures}}.dump(2) << "\n";
    } else {
        for (const auto& f : vr.failures)
            std::cout << "residual [" << f.relation << "] = " << any_to_string(f.value) << "\n";
        std::cout << (vr.ok ? "verified" : "NOT a morphism") << "\n";
    }
    return vr.ok ? 0 : 1;
}

int cmd_dixmier_invert(const GlobalOpts& opts, const std::string& path) {
    const Json j = load_json_file(path);
    const ParamConfig cfg =
        j.contains("config") ? config_from_json(j.at("config")) : parse_params_flag(opts.params);
    const Algebra alg = tensor_localization(cfg);
    const GenMap f = make_positive_endo(alg, endodata_from_json(j));
    const DixmierInversion inv = dixmier_invert(f);
    const bool reduced = is_reduced_positive_form(inv.residual);
    const GenMap full_inverse = compose(inv.psi, invert_reduced(inv.residual));
    if (json_output(opts)) {
        std::cout << Json{{"psi", to_json(inv.psi)},
                          {"residual", to_json(inv.residual)},
                          {"inverse", to_json(full_inverse)},
                          {"residual_reduced", reduced}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "psi:\n";
        for (const auto& [g, img] : inv.psi.images)
            std::cout << "  " << letter_name(g) << " -> " << any_to_string(img) << "\n";
        std::cout << "residual (f o psi):\n";
        for (const auto& [g, img] : inv.residual.images)
            std::cout << "  " << letter_name(g) << " -> " << any_to_string(img) << "\n";
        std::cout << "inverse (psi o residual^-1):\n";
        for (const auto& [g, img] : full_inverse.images)
            std::cout << "  " << letter_name(g) << " -> " << any_to_string(img) << "\n";
        std::cout << (reduced ? "residual has the reduced invertible form"
                              : "residual is NOT of the reduced form")
                  << "\n";
    }
    return reduced ? 0 : 1;
}

int cmd_classify_affine(const GlobalOpts& opts, const std::string& path) {
    const Json j = load_json_file(path);
    const ParamConfig cfg =
        j.contains("config") ? config_from_json(j.at("config")) : parse_params_flag(opts.params);
    const Algebra alg(AlgebraKind::A,
                      AlgebraParams{ParamScalar::p(), ParamScalar::q(), ParamScalar(1), ParamScalar(1)},
                      cfg);
    const ClassifyOutcome outcome = classify_affine(affine_from_json(j), alg);
    if (json_output(opts)) {
        Json failures = Json::array();
        for (const auto& f : outcome.failures)
            failures.push_back(Json{{"relation", f.relation},
                                    {"residual", std::visit([](const auto& e) { return to_json(e); }, f.value)}});
        std::cout << Json{{"verified", outcome.verified},
                          {"family", outcome.family},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& f : outcome.failures)
            std::cout << "residual [" << f.relation << "] = " << any_to_string(f.value) << "\n";
        if (outcome.verified) std::cout << "verified: family " << outcome.family << "\n";
        else std::cout << "NOT an automorphism\n";
    }
    return outcome.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for the extended quantized Weyl algebra A_p(l, u; K_q[s,t])"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--params", opts.params,
                   "parameter mode: 'generic' or assignments like p=-1,q=2 (unset values default to 1)");
    app.add_option("--algebra", opts.algebra, "algebra selector: A | A-w | A-loc | torus");
    app.add_option("--output", opts.output, "output format: text | json");

    std::string expr, second, path, gen_name = "z", filter;
    int max_degree = 3;

    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr)->required();

    CLI::App* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("lhs", expr)->required();
    mul->add_option("rhs", second)->required();

    CLI::App* comm = app.add_subcommand("commutator", "commutator of two expressions");
    comm->add_option("lhs", expr)->required();
    comm->add_option("rhs", second)->required();

    CLI::App* togwa = app.add_subcommand("to-gwa", "convert a PBW expression to the z-basis");
    togwa->add_option("expr", expr)->required();

    CLI::App* fromgwa = app.add_subcommand("from-gwa", "convert a z-basis expression to the PBW basis");
    fromgwa->add_option("expr", expr)->required();

    CLI::App* inv = app.add_subcommand("invert-unit", "invert a unit of the localization");
    inv->add_option("expr", expr)->required();

    CLI::App* member = app.add_subcommand("ideal-member", "membership in (z), (s) or (t)");
    member->add_option("--gen", gen_name, "ideal generator: z | s | t");
    member->add_option("expr", expr)->required();

    CLI::App* center = app.add_subcommand("center", "degree-bounded center scan");
    center->add_option("--max-degree", max_degree, "total degree bound")->required();

    CLI::App* verify = app.add_subcommand("verify-morphism", "verify a generator-image file");
    verify->add_option("file", path)->required();

    CLI::App* dixmier = app.add_subcommand("dixmier-invert", "constructively invert endomorphism data");
    dixmier->add_option("file", path)->required();

    CLI::App* classify = app.add_subcommand("classify-affine", "verify and classify an affine candidate");
    classify->add_option("file", path)->required();

    CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
    suite->add_option("--filter", filter, "run only criteria whose tag contains this string");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed()) return eval_command(opts, expr);
        if (mul->parsed()) return eval_command(opts, expr, second, 1);
        if (comm->parsed()) return eval_command(opts, expr, second, 2);

        if (togwa->parsed()) {
            const Algebra alg = Algebra::plain(parse_params_flag(opts.params));
            print_element(opts, to_gwa(parse_pbw(alg, expr)));
            return 0;
        }
        if (fromgwa->parsed()) {
            const Algebra alg = Algebra::plain(parse_params_flag(opts.params));
            print_element(opts, from_gwa(parse_gwa(alg, expr)));
            return 0;
        }
        if (inv->parsed()) {
            const Algebra alg = Algebra::localized(parse_params_flag(opts.params));
            print_element(opts, invert_unit(parse_loc(alg, expr)));
            return 0;
        }
        if (member->parsed()) {
            const Algebra alg = Algebra::plain(parse_params_flag(opts.params));
            NormalGen gen;
            if (gen_name == "z") gen = NormalGen::Z;
            else if (gen_name == "s") gen = NormalGen::S;
            else if (gen_name == "t") gen = NormalGen::T;
            else throw Error("--gen must be z, s or t");
            const bool in = ideal_membership(to_gwa(parse_pbw(alg, expr)), gen);
            if (json_output(opts)) std::cout << Json{{"member", in}}.dump() << "\n";
            else std::cout << (in ? "member" : "not a member") << "\n";
            return in ? 0 : 1;
        }
        if (center->parsed()) {
            if (opts.algebra == "torus") {
                const Torus ctx = Torus::standard(Algebra::localized(parse_params_flag(opts.params)));
                const TorusCenterScanResult r = center_scan_torus(ctx, max_degree);
                if (json_output(opts)) {
                    Json basis = Json::array();
                    for (const auto& e : r.basis) basis.push_back(to_json(e));
                    std::cout << Json{{"dimension", r.dimension}, {"max_degree", r.max_degree}, {"basis", basis}}.dump(2)
                              << "\n";
                } else {
                    std::cout << "dimension " << r.dimension << " at max degree " << r.max_degree << "\n";
                    for (const auto& e : r.basis) print_element(opts, e);
                }
                return 0;
            }
            const Algebra alg = algebra_for(opts);
            const CenterScanResult r = center_scan(alg, max_degree);
            if (json_output(opts)) {
                Json basis = Json::array();
                for (const auto& e : r.basis) basis.push_back(to_json(e));
                std::cout << Json{{"dimension", r.dimension}, {"max_degree", r.max_degree}, {"basis", basis}}.dump(2)
                          << "\n";
            } else {
                std::cout << "dimension " << r.dimension << " at max degree " << r.max_degree << "\n";
                for (const auto& e : r.basis) std::cout << e.to_string() << "\n";
            }
            return 0;
        }
        if (verify->parsed()) return cmd_verify_morphism(opts, path);
        if (dixmier->parsed()) return cmd_dixmier_invert(opts, path);
        if (classify->parsed()) return cmd_classify_affine(opts, path);
        if (suite->parsed()) {
            const auto results = run_acceptance_suite(filter, &std::cout);
            if (results.empty()) {
                std::cerr << "no criteria matched filter '" << filter << "'\n";
                return 2;
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
