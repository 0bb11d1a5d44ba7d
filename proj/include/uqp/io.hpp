#pragma once

#include <string>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "uqp/hopf.hpp"
#include "uqp/irrep.hpp"
#include "uqp/report.hpp"
#include "uqp/weightfn.hpp"

namespace uqp::io {

using Document = nlohmann::ordered_json;

inline Document scalar_json(const Scalar& z) { return Document::array({z.real(), z.imag()}); }

/// Row-major nested arrays of [re, im] pairs.
inline Document matrix_json(const Matrix& m) {
    Document rows = Document::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Document row = Document::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string label(const ReportParams& p) {
    if (p.j) return p.subject + "[j=" + p.j->str() + "]";
    if (p.j1 && p.j2) return p.subject + "[j1=" + p.j1->str() + ",j2=" + p.j2->str() + "]";
    return p.subject;
}

inline Document params_json(const ReportParams& p) {
    Document d;
    d["subject"] = p.subject;
    d["kind"] = std::string(to_string(p.kind));
    d["q"] = scalar_json(p.q);
    d["p"] = scalar_json(p.p);
    d["beta"] = scalar_json(p.beta);
    d["eta"] = p.eta;
    if (p.j) d["j"] = p.j->str();
    if (p.j1) d["j1"] = p.j1->str();
    if (p.j2) d["j2"] = p.j2->str();
    d["truncation_order"] = p.truncation_order;
    return d;
}

inline Document report_json(const CheckReport& r) {
    Document d;
    d["params"] = params_json(r.params);
    d["passed"] = r.passed();
    Document checks = Document::array();
    for (const auto& c : r.checks) {
        Document e;
        e["name"] = c.name;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    d["checks"] = std::move(checks);
    return d;
}

inline Document reports_json(const std::vector<CheckReport>& reports) {
    Document d;
    bool ok = true;
    Document list = Document::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        list.push_back(report_json(r));
    }
    d["passed"] = ok;
    d["reports"] = std::move(list);
    return d;
}

/// One check per line: name, residual, tolerance, pass.
inline std::string reports_table(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            out += fmt::format("{}.{}\t{:.17g}\t{:.17g}\t{}\n", label(r.params), c.name, c.residual, c.tolerance,
                               c.pass ? "pass" : "FAIL");
    return out;
}

inline Document coeffs_json(const WeightFunction& chi, const PsiSeries& psi) {
    Document d;
    d["kind"] = std::string(to_string(chi.kind));
    d["q"] = scalar_json(chi.q);
    d["truncation_order"] = chi.truncation_order;
    d["truncation_bound"] = chi.truncation_bound;
    d["weight_bound"] = chi.weight_bound;
    d["a0"] = scalar_json(psi.a0);
    if (psi.c0) d["c0"] = scalar_json(*psi.c0);
    Document rows = Document::array();
    for (const auto& [k, b] : chi.coeffs) {
        Document row;
        row["k"] = k;
        row["b"] = scalar_json(b);
        row["a"] = scalar_json(psi.coeffs.at(k));
        rows.push_back(std::move(row));
    }
    d["coefficients"] = std::move(rows);
    return d;
}

inline std::string coeffs_table(const WeightFunction& chi, const PsiSeries& psi) {
    std::string out = fmt::format("# kind={} N={} bound={:.17g} a0=({:.17g},{:.17g})\n", to_string(chi.kind),
                                  chi.truncation_order, chi.truncation_bound, psi.a0.real(), psi.a0.imag());
    out += "k\tb_re\tb_im\ta_re\ta_im\n";
    for (const auto& [k, b] : chi.coeffs) {
        const Scalar a = psi.coeffs.at(k);
        out += fmt::format("{}\t{:.17g}\t{:.17g}\t{:.17g}\t{:.17g}\n", k, b.real(), b.imag(), a.real(), a.imag());
    }
    return out;
}

inline Document irrep_json(const Irrep& rep, const AlgebraParams& params, ChiKind kind) {
    Document d;
    d["j"] = rep.j.str();
    d["eta"] = rep.eta;
    d["kind"] = std::string(to_string(kind));
    d["q"] = scalar_json(rep.q);
    d["p"] = scalar_json(params.p);
    d["beta"] = scalar_json(params.beta);
    if (rep.psi) d["casimir_eigenvalue"] = scalar_json(eval_psi(*rep.psi, rep.j));
    Document m;
    m["K2"] = matrix_json(rep.K2);
    m["K2inv"] = matrix_json(rep.K2inv);
    m["Jplus"] = matrix_json(rep.Jplus);
    m["Jminus"] = matrix_json(rep.Jminus);
    m["JhatPlus"] = matrix_json(rep.JhatPlus);
    m["JhatMinus"] = matrix_json(rep.JhatMinus);
    m["C"] = matrix_json(rep.C);
    m["Chat"] = matrix_json(rep.Chat);
    d["matrices"] = std::move(m);
    return d;
}

inline Document tensor_json(const TensorRep& t, const AlgebraParams& params, ChiKind kind) {
    Document d;
    d["j1"] = t.left.j.str();
    d["j2"] = t.right.j.str();
    d["eta"] = t.left.eta;
    d["kind"] = std::string(to_string(kind));
    d["q"] = scalar_json(t.left.q);
    d["p"] = scalar_json(params.p);
    d["beta"] = scalar_json(params.beta);
    Document blocks = Document::array();
    for (const auto& b : t.blocks) {
        Document e;
        e["weight"] = b.weight.str();
        e["indices"] = b.indices;
        blocks.push_back(std::move(e));
    }
    d["blocks"] = std::move(blocks);
    Document m;
    m["DJ0exp"] = matrix_json(t.DJ0exp);
    m["DJplus"] = matrix_json(t.DJplus);
    m["DJminus"] = matrix_json(t.DJminus);
    m["DC"] = matrix_json(t.DC);
    m["DJhatPlus"] = matrix_json(t.DJhatPlus);
    m["DJhatMinus"] = matrix_json(t.DJhatMinus);
    d["matrices"] = std::move(m);
    return d;
}

} // namespace uqp::io
