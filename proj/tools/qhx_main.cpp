// qhx command line: table verification, matrix classification, transform
// application, and holomorphy checks over the library.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant failure,
// 3 domain violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhx/algebra.hpp"
#include "qhx/expr.hpp"
#include "qhx/holomorphy.hpp"
#include "qhx/json_io.hpp"
#include "qhx/matgroup.hpp"
#include "qhx/qht.hpp"

namespace {

using qhx::jsonio::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitDomain = 3;

struct Options {
    std::string format = "text";
    double tol = -1.0; // negative: use each command's default
    std::uint64_t seed = 0x5EED;

    bool json() const { return format == "json"; }
    double tol_or(double fallback) const { return tol >= 0.0 ? tol : fallback; }
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return Json::parse(in);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_verify_tables(const Options& opt) {
    using qhx::symop::Catalog;
    const Catalog catalogs[] = {Catalog::X, Catalog::G, Catalog::HeisenbergA,
                                Catalog::HeisenbergB, Catalog::Sl2};

    // Oracle-internal invariants first; a failure here is exit 2.
    std::vector<std::string> failures;
    for (Catalog c : catalogs) {
        if (auto fail = qhx::symop::oracle_self_check(c))
            failures.push_back(std::string(qhx::symop::catalog_name(c)) + ": " + *fail);
        try {
            qhx::symop::commutator_table(c);
        } catch (const qhx::symop::NotClosedError& e) {
            failures.push_back(std::string(qhx::symop::catalog_name(c)) + ": " + e.what());
        }
    }
    for (Catalog c : {Catalog::X, Catalog::G})
        if (!qhx::symop::adjoint_property_holds(qhx::symop::catalog_basis(c)))
            failures.push_back(std::string(qhx::symop::catalog_name(c)) +
                               ": adjoint representation violates the table");

    struct Labeled {
        qhx::symop::DiscrepancyReport report;
        Catalog symbols;
        const char* flavor;
    };
    std::vector<Labeled> reports;
    for (Catalog c : catalogs)
        reports.push_back({qhx::symop::verify_against_reference(c), c, "differential"});
    reports.push_back({qhx::matgroup::verify_matrix_table(qhx::matgroup::MatCatalog::XHat),
                       Catalog::X, "matrix"});
    reports.push_back({qhx::matgroup::verify_matrix_table(qhx::matgroup::MatCatalog::GHat),
                       Catalog::G, "matrix"});

    if (opt.json()) {
        Json doc;
        doc["reports"] = Json::array();
        for (const auto& l : reports) {
            Json j = qhx::jsonio::to_json(l.report, l.symbols);
            j["flavor"] = l.flavor;
            doc["reports"].push_back(std::move(j));
        }
        doc["internal_invariants"] =
            Json{{"status", failures.empty() ? "ok" : "failed"}, {"failures", failures}};
        emit(doc);
    } else {
        for (const auto& l : reports) {
            std::cout << "table " << l.report.catalog << " (" << l.flavor << "): "
                      << l.report.match_count() << "/" << l.report.entries.size()
                      << " entries match the reference\n";
            for (const auto& e : l.report.entries) {
                if (e.match) continue;
                std::cout << "  [" << qhx::symop::basis_symbol(l.symbols, e.i) << ","
                          << qhx::symop::basis_symbol(l.symbols, e.j) << "] computed "
                          << qhx::symop::coeff_map_to_string(l.symbols, e.computed)
                          << ", reference "
                          << qhx::symop::coeff_map_to_string(l.symbols, e.reference) << "\n";
            }
            for (const auto& n : l.report.notes) std::cout << "  note: " << n << "\n";
        }
        if (failures.empty()) {
            std::cout << "internal invariants: ok (antisymmetry, Jacobi, closure, adjoint)\n";
        } else {
            std::cout << "internal invariants: FAILED\n";
            for (const auto& f : failures) std::cout << "  " << f << "\n";
        }
    }
    return failures.empty() ? kExitOk : kExitInternal;
}

int cmd_classify(const Options& opt, const std::string& path) {
    qhx::matgroup::Mat3 m;
    try {
        m = qhx::jsonio::mat3_from_json(load_json_file(path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    try {
        auto flags = qhx::matgroup::classify(m, opt.tol_or(1e-9));
        if (opt.json()) {
            emit(qhx::jsonio::to_json(flags));
        } else {
            Json f = qhx::jsonio::to_json(flags);
            std::cout << "flags:";
            for (const auto& name : f["flags"]) std::cout << " " << name.get<std::string>();
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const qhx::matgroup::NotInXError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

int cmd_apply(const Options& opt, const std::string& path, const std::string& point_json) {
    qhx::QhtTransform<double> t;
    qhx::Quat q;
    try {
        t = qhx::jsonio::transform_from_json(load_json_file(path));
        q = qhx::jsonio::quat_from_json(Json::parse(point_json));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    bool constant = t.u.is_zero();
    qhx::Quat image = qhx::apply(t, q);
    auto fixed = qhx::fixed_points(t);
    if (opt.json()) {
        Json doc{{"image", qhx::jsonio::to_json(image)},
                 {"fixed_points", qhx::jsonio::to_json(fixed)}};
        if (constant) doc["warning"] = "transform is constant (u = 0); not invertible";
        emit(doc);
    } else {
        if (constant) std::cout << "warning: transform is constant (u = 0); not invertible\n";
        std::cout << "image: " << qhx::to_string(image) << "\n";
        std::cout << "fixed points: " << qhx::to_string(fixed.kind);
        if (fixed.finite_point)
            std::cout << " at " << qhx::to_string(*fixed.finite_point);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_holo_check(const Options& opt, const std::string& text) {
    qhx::expr::Expression e;
    try {
        e = qhx::expr::parse(text);
    } catch (const qhx::expr::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    auto pts = qhx::holo::default_sample_points(20, opt.seed);
    auto verdict = qhx::holo::classify_holomorphy(
        [&e](const qhx::Quat& q) { return e.eval(q); }, pts, 1e-5, opt.tol_or(1e-6));
    if (opt.json()) {
        Json doc = qhx::jsonio::to_json(verdict);
        doc["expression"] = text;
        emit(doc);
    } else {
        std::cout << qhx::holo::to_string(verdict.cls)
                  << " (max residual " << qhx::jsonio::format_double(verdict.max_residual)
                  << " at " << qhx::to_string(verdict.worst_point) << ")\n";
    }
    return kExitOk;
}

int cmd_exp(const Options& opt, int index, double t) {
    qhx::matgroup::GroupElement g;
    try {
        g = qhx::matgroup::exp_generator(index, t);
    } catch (const qhx::matgroup::UnknownIndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (opt.json()) {
        emit(qhx::jsonio::to_json(g));
    } else {
        auto m = g.to_mat3();
        for (int r = 0; r < 3; ++r) {
            std::cout << (r == 0 ? "[" : " ");
            for (int c = 0; c < 3; ++c) {
                auto v = m.at(r, c);
                std::cout << " (" << qhx::jsonio::format_double(v.real()) << ", "
                          << qhx::jsonio::format_double(v.imag()) << ")";
            }
            std::cout << (r == 2 ? " ]" : "") << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion similarity-transform toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "tolerance override");
    app.add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify-tables", "recompute the commutator tables and diff them against the reference");

    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "classify a 3x3 matrix from a JSON file");
    classify->add_option("file", classify_path, "matrix JSON file")->required();

    std::string apply_path, apply_point = R"({"x0":0,"x1":0,"x2":0,"x3":0})";
    auto* apply = app.add_subcommand("apply", "apply a transform file to a point");
    apply->add_option("file", apply_path, "transform JSON file")->required();
    apply->add_option("--point", apply_point, "point as quaternion JSON");

    std::string holo_expr;
    auto* holo = app.add_subcommand("holo-check", "classify an expression in q and qbar");
    holo->add_option("expr", holo_expr, "expression, e.g. \"q*i + j\"")->required();

    int exp_index = 1;
    double exp_t = 0.0;
    auto* exp = app.add_subcommand("exp", "exponential of a scaled algebra generator");
    exp->add_option("--generator", exp_index, "generator index 1..6")->required();
    exp->add_option("--t", exp_t, "parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (verify->parsed()) return cmd_verify_tables(opt);
        if (classify->parsed()) return cmd_classify(opt, classify_path);
        if (apply->parsed()) return cmd_apply(opt, apply_path, apply_point);
        if (holo->parsed()) return cmd_holo_check(opt, holo_expr);
        if (exp->parsed()) return cmd_exp(opt, exp_index, exp_t);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
