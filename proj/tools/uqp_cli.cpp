// uqp: build and verify representations of the elliptic U_{q,p}(sl(2)) algebra.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "uqp/io.hpp"
#include "uqp/uqp.hpp"

namespace {

using uqp::HalfInt;
using uqp::Scalar;

struct Options {
    std::string chi = "elliptic";
    std::string q = "1.2";
    std::string p = "0.1";
    std::string beta = "0";
    std::optional<std::string> c0;
    std::optional<std::string> coeff_file;
    int eta = 0;
    double trunc_tol = 1e-16;
    double match_tol = 1e-10;
    double spectral_tol = 1e-8;
    std::optional<double> weight_bound;
    std::string format = "structured";
    std::optional<std::string> output;

    std::string j = "0", j1 = "0", j2 = "0", m = "1/2";
    std::optional<int> order;
    std::vector<std::string> spins;
    std::vector<std::string> pairs;
};

/// "1.2" or "1.2,0.5" (real, imaginary).
Scalar parse_scalar(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const auto comma = text.find(',');
        const double re = std::stod(text.substr(0, comma), &used);
        if (used != text.substr(0, comma).size()) throw std::invalid_argument(text);
        if (comma == std::string::npos) return {re, 0.0};
        const std::string im_text = text.substr(comma + 1);
        const double im = std::stod(im_text, &used);
        if (used != im_text.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw uqp::invalid_argument_error(fmt::format("--{}: cannot parse '{}' as a number", what, text));
    }
}

uqp::AlgebraParams make_params(const Options& o) {
    uqp::AlgebraParams params;
    params.q = parse_scalar(o.q, "q");
    params.p = parse_scalar(o.p, "p");
    params.beta = parse_scalar(o.beta, "beta");
    params.eta = o.eta;
    params.trunc_tol = o.trunc_tol;
    params.match_tol = o.match_tol;
    params.spectral_tol = o.spectral_tol;
    params.validate();
    return params;
}

std::optional<uqp::CoefficientTable> load_custom(const Options& o, uqp::ChiKind kind) {
    if (kind != uqp::ChiKind::custom) return std::nullopt;
    if (!o.coeff_file) throw uqp::invalid_argument_error("--chi custom requires --coeff-file");
    std::ifstream in(*o.coeff_file);
    if (!in) throw uqp::invalid_argument_error("cannot open coefficient file '" + *o.coeff_file + "'");
    return uqp::read_coefficient_table(in);
}

std::optional<Scalar> c0_of(const Options& o) {
    if (!o.c0) return std::nullopt;
    return parse_scalar(*o.c0, "c0");
}

struct Chi {
    uqp::WeightFunction chi;
    uqp::PsiSeries psi;
};

Chi make_chi(const Options& o, const uqp::AlgebraParams& params, double weight_bound) {
    const auto kind = uqp::parse_chi_kind(o.chi);
    const auto custom = load_custom(o, kind);
    auto chi = uqp::make_chi(kind, params, o.weight_bound.value_or(weight_bound), custom ? &*custom : nullptr);
    auto psi = uqp::solve_psi(chi, c0_of(o));
    return {std::move(chi), std::move(psi)};
}

void emit(const Options& o, const std::string& text) {
    if (!o.output) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(*o.output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("UQP_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) throw uqp::invalid_argument_error("cannot write '" + path.string() + "'");
    out << text;
}

std::string dump(const uqp::io::Document& doc) { return doc.dump(2) + "\n"; }

bool structured(const Options& o) {
    if (o.format == "structured") return true;
    if (o.format == "table") return false;
    throw uqp::invalid_argument_error("--format must be 'structured' or 'table'");
}

int cmd_coeffs(const Options& o) {
    const auto params = make_params(o);
    const auto [chi, psi] = make_chi(o, params, 10.0);
    emit(o, structured(o) ? dump(uqp::io::coeffs_json(chi, psi)) : uqp::io::coeffs_table(chi, psi));
    return 0;
}

int cmd_rep(const Options& o) {
    const auto params = make_params(o);
    const HalfInt j = HalfInt::parse(o.j);
    const auto [chi, psi] = make_chi(o, params, std::max(10, j.twice()));
    const auto rep = uqp::make_irrep(j, params.eta, psi);
    const auto report = uqp::check_relations(rep, chi, params);
    if (structured(o)) {
        auto doc = uqp::io::irrep_json(rep, params, chi.kind);
        doc["report"] = uqp::io::report_json(report);
        emit(o, dump(doc));
    } else {
        emit(o, uqp::io::reports_table({report}));
    }
    return report.passed() ? 0 : 1;
}

int cmd_coproduct(const Options& o) {
    const auto params = make_params(o);
    const HalfInt j1 = HalfInt::parse(o.j1), j2 = HalfInt::parse(o.j2);
    const auto [chi, psi] = make_chi(o, params, std::max(10, j1.twice() + j2.twice()));
    auto t = uqp::build_tensor(uqp::make_irrep(j1, params.eta, psi), uqp::make_irrep(j2, params.eta, psi),
                               params.spectral_tol);
    t = uqp::build_induced_coproduct(std::move(t), psi);
    const auto report = uqp::check_coproduct(t, chi, params);
    if (structured(o)) {
        auto doc = uqp::io::tensor_json(t, params, chi.kind);
        doc["report"] = uqp::io::report_json(report);
        emit(o, dump(doc));
    } else {
        emit(o, uqp::io::reports_table({report}));
    }
    return report.passed() ? 0 : 1;
}

/// "1/2:3/2" -> (1/2, 3/2)
std::pair<HalfInt, HalfInt> parse_pair(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw uqp::invalid_argument_error("--pair expects 'j1:j2', got '" + text + "'");
    return {HalfInt::parse(text.substr(0, colon)), HalfInt::parse(text.substr(colon + 1))};
}

int cmd_check(const Options& o) {
    const auto params = make_params(o);
    const auto kind = uqp::parse_chi_kind(o.chi);
    uqp::SuiteConfig cfg;
    if (o.spins.empty() && o.pairs.empty()) {
        cfg = uqp::default_suite(params, kind);
    } else {
        cfg.params = params;
        cfg.kind = kind;
        for (const auto& s : o.spins) cfg.spins.push_back(HalfInt::parse(s));
        for (const auto& s : o.pairs) cfg.pairs.push_back(parse_pair(s));
    }
    cfg.custom = load_custom(o, kind);
    cfg.c0 = c0_of(o);
    const auto reports = uqp::run_suite(cfg);
    emit(o, structured(o) ? dump(uqp::io::reports_json(reports)) : uqp::io::reports_table(reports));
    return uqp::all_passed(reports) ? 0 : 1;
}

int cmd_oracle(const Options& o) {
    const auto params = make_params(o);
    const HalfInt m = HalfInt::parse(o.m);
    const double bound = std::max(1, std::abs(m.twice()));
    const auto chi = uqp::chi_elliptic(params.q, params.p, params.trunc_tol, bound);
    const int order = o.order.value_or(chi.truncation_order);
    if (order < 0) throw uqp::invalid_argument_error("--order must be nonnegative");
    const Scalar direct = uqp::oracle_theta_sum(m, params.q, params.p, order);
    const Scalar wider = uqp::oracle_theta_sum(m, params.q, params.p, order + 2);
    const Scalar table = chi.evaluate(m);
    if (structured(o)) {
        uqp::io::Document d;
        d["m"] = m.str();
        d["q"] = uqp::io::scalar_json(params.q);
        d["p"] = uqp::io::scalar_json(params.p);
        d["order"] = order;
        d["direct_sum"] = uqp::io::scalar_json(direct);
        d["direct_sum_order_plus_2"] = uqp::io::scalar_json(wider);
        d["table_value"] = uqp::io::scalar_json(table);
        emit(o, dump(d));
    } else {
        emit(o, fmt::format("{}\t{}\t{:.17g}\t{:.17g}\t{:.17g}\t{:.17g}\n", m.str(), order, direct.real(), direct.imag(),
                            table.real(), table.imag()));
    }
    return 0;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--chi", o.chi, "weight function: standard, beta, elliptic, custom");
    sub->add_option("--q", o.q, "deformation parameter, 're' or 're,im'");
    sub->add_option("--p", o.p, "elliptic nome, 're' or 're,im'");
    sub->add_option("--beta", o.beta, "polynomial deformation strength");
    sub->add_option("--c0", o.c0, "fix a0 so that psi(-1/2) = c0");
    sub->add_option("--coeff-file", o.coeff_file, "coefficient table 'k re im' for --chi custom");
    sub->add_option("--eta", o.eta, "-1, 0 or 1");
    sub->add_option("--trunc-tol", o.trunc_tol, "theta truncation target");
    sub->add_option("--match-tol", o.match_tol, "residual tolerance");
    sub->add_option("--spectral-tol", o.spectral_tol, "eigenvalue identification tolerance");
    sub->add_option("--weight-bound", o.weight_bound, "largest |2m| the theta table must certify");
    sub->add_option("--format", o.format, "structured or table");
    sub->add_option("-o,--output", o.output, "output file (relative paths resolve against $UQP_OUTPUT_DIR)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic U_{q,p}(sl(2)) representations via a nonlinear map from U_q(sl(2))"};
    app.require_subcommand(1);
    Options o;

    auto* coeffs = app.add_subcommand("coeffs", "print the b_k and a_k coefficient tables");
    auto* rep = app.add_subcommand("rep", "build one mapped irrep and check its relations");
    auto* coproduct = app.add_subcommand("coproduct", "build a tensor product with the induced coproduct");
    auto* check = app.add_subcommand("check", "run the verification suite");
    auto* oracle = app.add_subcommand("oracle", "direct theta-series summation at one weight");
    for (auto* sub : {coeffs, rep, coproduct, check, oracle}) add_common(sub, o);
    rep->add_option("--j", o.j, "spin, e.g. 3/2")->required();
    coproduct->add_option("--j1", o.j1, "left spin")->required();
    coproduct->add_option("--j2", o.j2, "right spin")->required();
    check->add_option("--j", o.spins, "irrep spins to check (repeatable)");
    check->add_option("--pair", o.pairs, "tensor pairs 'j1:j2' to check (repeatable)");
    oracle->add_option("--m", o.m, "weight")->required();
    oracle->add_option("--order", o.order, "terms n = -N..N-1 (default: certified order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*coeffs) return cmd_coeffs(o);
        if (*rep) return cmd_rep(o);
        if (*coproduct) return cmd_coproduct(o);
        if (*check) return cmd_check(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
