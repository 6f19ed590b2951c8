// Command-line surface: run the verification suite or print one tensor.
#include "tpsgeo/curvfamily.hpp"
#include "tpsgeo/parser.hpp"
#include "tpsgeo/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace tpsgeo;

ModelSpec load_model(const std::string& path, const std::string& builtin) {
    if (!path.empty() && !builtin.empty())
        throw ModelValidationError("model", "give either --model or --builtin, not both");
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open model file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_model(ss.str());
    }
    if (!builtin.empty()) return builtin_model(builtin);
    throw ModelValidationError("model", "a model is required: --model <path> or --builtin <name>");
}

std::vector<double> parse_point(const std::string& text, int dim) {
    std::vector<double> p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(std::stod(item));
    if (static_cast<int>(p.size()) != dim)
        throw Error("--at needs " + std::to_string(dim) + " comma-separated coordinates");
    return p;
}

void apply_tolerance_overrides(ToleranceSet& tols, const std::vector<std::string>& kvs) {
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("--tol expects KEY=VALUE, got: " + kv);
        tols.overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
}

void print_component(const std::string& name, std::span<const int> idx, double v) {
    std::string s = name + "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i] + 1);
    }
    std::printf("%s) = %.12g\n", s.c_str(), v);
}

void print_rank2(const std::string& name, int d, const std::function<double(int, int)>& f) {
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const int idx[2] = {a, b};
            print_component(name, idx, f(a, b));
        }
}

void print_rank4(const std::string& name, int d,
                 const std::function<double(int, int, int, int)>& f) {
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    const int idx[4] = {a, b, c, w};
                    print_component(name, idx, f(a, b, c, w));
                }
}

int cmd_tensor(const ModelSpec& spec, const std::string& name, const std::string& at) {
    const int d = spec.dim();
    const auto point = parse_point(at, d);
    for (int c = 0; c < d; ++c)
        if (point[static_cast<std::size_t>(c)] < spec.box_lo[static_cast<std::size_t>(c)] ||
            point[static_cast<std::size_t>(c)] > spec.box_hi[static_cast<std::size_t>(c)])
            throw Error("point is outside the model's sample box");

    static const std::vector<std::string> names = {
        "g",           "phi",    "gamma", "riemann", "ricci", "scal",     "P",
        "C",           "concircular", "Ptilde", "Pbar", "B",   "alphabeta"};
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UnknownKeyError("tensor", name, names);

    const PointGeometry g = compute_geometry(spec, point);

    if (name == "g") {
        print_rank2("g", d, [&](int a, int b) { return g.ps.g_value(a, b); });
    } else if (name == "phi") {
        print_rank2("phi", d, [&](int a, int b) { return g.ps.phi_value(a, b); });
    } else if (name == "gamma") {
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const int idx[3] = {c, a, b};
                    print_component("gamma", idx, g.ch.G(c, a, b));
                }
    } else if (name == "riemann") {
        print_rank4("riemann", d,
                    [&](int a, int b, int c, int w) { return g.cd.Rdn(a, b, c, w); });
    } else if (name == "ricci") {
        print_rank2("ricci", d, [&](int a, int b) { return g.cd.Ric(a, b); });
    } else if (name == "scal") {
        std::printf("scal = %.12g\n", g.cd.scal);
    } else if (name == "P") {
        const auto t = projective(g.ps, g.cd);
        print_rank4("P", d, [&](int a, int b, int c, int w) { return t.components(a, b, c, w); });
    } else if (name == "C") {
        const auto t = conformal(g.ps, g.cd);
        print_rank4("C", d, [&](int a, int b, int c, int w) { return t.components(a, b, c, w); });
    } else if (name == "concircular") {
        const auto t = concircular(g.ps, g.cd);
        print_rank4("concircular", d,
                    [&](int a, int b, int c, int w) { return t.components(a, b, c, w); });
    } else if (name == "Ptilde") {
        const auto t = projective_ricci(g.ps, g.cd);
        print_rank2("Ptilde", d, [&](int a, int b) { return t.components(a, b); });
    } else if (name == "Pbar") {
        const auto t = pseudo_projective(g.ps, g.cd, spec.pp_a, spec.pp_b);
        print_rank4("Pbar", d,
                    [&](int a, int b, int c, int w) { return t.components(a, b, c, w); });
    } else if (name == "B") {
        const auto t = pc_bochner(g.ps, g.cd);
        print_rank4("B", d, [&](int a, int b, int c, int w) { return t.components(a, b, c, w); });
    } else if (name == "alphabeta") {
        std::printf("alpha = %.12g, beta = %.12g\n", g.ab.alpha, g.ab.beta);
        std::printf("xi(alpha) = %.12g, xi(beta) = %.12g\n", g.ab.xi_alpha, g.ab.xi_beta);
        std::printf("grad_alpha =");
        for (double v : g.ab.grad_alpha) std::printf(" %.12g", v);
        std::printf("\ngrad_beta =");
        for (double v : g.ab.grad_beta) std::printf(" %.12g", v);
        std::printf("\nnabla_xi_residual = %.12g\n", g.ab.nabla_xi_residual);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointwise verification engine for trans-para-Sasakian geometry"};
    app.require_subcommand(1);

    std::string model_path, builtin_name, format = "text", tensor_name, at_text;
    int points = 100;
    std::uint64_t seed = 42;
    std::vector<std::string> tol_overrides;

    CLI::App* verify = app.add_subcommand("verify", "run the full claim and theorem suite");
    verify->add_option("--model", model_path, "model file path");
    verify->add_option("--builtin", builtin_name, "builtin model name (example25, flat3)");
    verify->add_option("--points", points, "number of sample points")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--tol", tol_overrides,
                       "tolerance override KEY=VALUE (claim/theorem id or class name)");

    CLI::App* tensor = app.add_subcommand("tensor", "print one tensor at a point");
    tensor
        ->add_option("name", tensor_name,
                     "one of: g, phi, gamma, riemann, ricci, scal, P, C, concircular, "
                     "Ptilde, Pbar, B, alphabeta")
        ->required();
    tensor->add_option("--model", model_path, "model file path");
    tensor->add_option("--builtin", builtin_name, "builtin model name (example25, flat3)");
    tensor->add_option("--at", at_text, "comma-separated coordinates")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const ModelSpec spec = load_model(model_path, builtin_name);
        if (app.got_subcommand("tensor")) return cmd_tensor(spec, tensor_name, at_text);

        RunOptions opt;
        opt.points = points;
        opt.seed = seed;
        apply_tolerance_overrides(opt.tolerances, tol_overrides);
        const Report rep = run_suite(spec, opt);
        if (format == "json")
            std::fputs(report_json(rep).c_str(), stdout);
        else
            std::fputs(report_text(rep).c_str(), stdout);
        return rep.all_checks_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
