#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "forms/errors.hpp"
#include "forms/form_union.hpp"
#include "forms/json_io.hpp"
#include "forms/linking.hpp"
#include "forms/quadratic.hpp"
#include "forms/seifert.hpp"
#include "forms/selftest.hpp"

using nlohmann::json;

namespace {

unsigned long long env_search_cap() {
    if (const char* s = std::getenv("FORMTOOL_SEARCH_CAP")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw forms::parse_error("FORMTOOL_SEARCH_CAP must be an integer");
        }
    }
    return forms::SearchBounds{}.search_cap;
}

forms::LMat matrix_file(const std::string& path) {
    const json j = forms::load_json_file(path);
    if (j.is_object() && j.contains("matrix"))
        return forms::matrix_from_json(j["matrix"]);
    if (j.is_object() && j.contains("gram"))
        return forms::matrix_from_json(j["gram"]);
    return forms::matrix_from_json(j);
}

forms::HermitianForm form_file(const std::string& path) {
    return forms::form_from_json(forms::load_json_file(path));
}

void emit(bool json_out, const json& report, std::ostream& out) {
    if (json_out) {
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
}

json matrix_report(const forms::LMat& m) { return forms::matrix_to_json(m); }

int run_analyze_seifert(const std::string& path, long bound,
                        unsigned long long cap, bool json_out) {
    const json j = forms::load_json_file(path);
    const forms::SeifertMatrix a = forms::seifert_from_json(j);
    const forms::Laurent delta = forms::alexander(a);
    const forms::HermitianForm pushed = forms::pushed_in_form(a);
    const std::size_t g = a.genus();

    forms::Laurent det_rhs = delta;
    const forms::Laurent tm1 = forms::Laurent::t(1) - forms::Laurent(1);
    for (std::size_t k = 0; k < 2 * g; ++k) det_rhs = det_rhs * tm1;
    const bool det_law =
        forms::associates(forms::det_laurent(pushed.gram()), det_rhs);

    const auto mb = forms::metaboliser_search(a, bound, cap);

    json report;
    if (j.is_object() && j.contains("name")) report["name"] = j["name"];
    report["delta"] = forms::to_string(delta);
    report["pushed_in_form"] = matrix_report(pushed.gram());
    report["metaboliser"] =
        mb ? forms::matrix_to_json(*mb) : json(nullptr);

    bool witness_ok = false;
    if (delta != forms::Laurent(1)) {
        report["witness"] = nullptr;
        report["witness_status"] = "alexander polynomial is not 1";
    } else if (!mb) {
        report["witness"] = nullptr;
        report["witness_status"] = "no metaboliser within the search window";
    } else {
        const forms::LMat w = forms::hyperbolic_witness(a, bound, cap);
        witness_ok = forms::verify_isometry(
            forms::target_form(forms::ZMat(0, 0), g), pushed, w);
        report["witness"] = matrix_report(w);
        report["witness_status"] = witness_ok ? "ok" : "invalid";
    }
    report["verification"] =
        json{{"det_law", det_law}, {"witness_isometry", witness_ok}};
    emit(json_out, report, std::cout);
    if (!det_law) return 1;
    if (report["witness_status"] == "invalid") return 1;
    return 0;
}

int run_boundary_form(const std::string& path, const std::string& sign,
                      bool json_out) {
    const forms::HermitianForm f = form_file(path);
    const int s = (sign == "minus") ? -1 : 1;
    const forms::LinkingForm b = forms::boundary_linking(f, s);
    const std::size_t n = b.gens();
    json table = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) {
            forms::LMat ei(n, 1), ek(n, 1);
            ei(i, 0) = forms::Laurent(1);
            ek(k, 0) = forms::Laurent(1);
            row.push_back(b.pair_classes(ei, ek).str());
        }
        table.push_back(row);
    }
    json report;
    report["sign"] = (s == 1) ? "plus" : "minus";
    report["order"] = forms::to_string(b.order());
    report["presentation"] = matrix_report(b.pres());
    report["pairing_on_generators"] = table;
    emit(json_out, report, std::cout);
    return 0;
}

int run_union(const std::string& p0, const std::string& p1,
              const std::string& ph, bool json_out) {
    const forms::HermitianForm f0 = form_file(p0);
    const forms::HermitianForm f1 = form_file(p1);
    const forms::LMat h = matrix_file(ph);
    const forms::UnionResult u = forms::form_union(f0, f1, h);
    json report;
    report["gram"] = matrix_report(u.form.gram());
    report["eps"] = forms::to_string(u.form.eps().to_laurent());
    report["embed0"] = matrix_report(u.embed0);
    report["embed1"] = matrix_report(u.embed1);
    try {
        report["lagrangian"] = matrix_report(forms::graph_lagrangian(u));
    } catch (const forms::not_a_lagrangian&) {
        report["lagrangian"] = nullptr;
    }
    emit(json_out, report, std::cout);
    return 0;
}

int run_aut(const std::string& delta_s, const std::string& b_s,
            const forms::SearchBounds& bounds, bool json_out) {
    const forms::Laurent delta = forms::parse_laurent(delta_s);
    const forms::Laurent b = forms::parse_laurent(b_s);
    (void)forms::cyclic_linking(delta, b);  // validates the pair
    const auto classes = forms::aut_cyclic_blanchfield(delta, b, bounds);
    json list = json::array();
    for (const auto& c : classes) list.push_back(forms::to_string(c));
    json report;
    report["delta"] = forms::to_string(forms::canonical_associate(delta));
    report["b"] = forms::to_string(b);
    report["classes"] = list;
    report["count"] = classes.size();
    report["window"] = json{{"deg_bound", bounds.deg_bound},
                            {"coeff_bound", bounds.coeff_bound},
                            {"search_cap", bounds.search_cap}};
    emit(json_out, report, std::cout);
    return 0;
}

int run_verify_isometry(const std::string& pa, const std::string& pb,
                        const std::string& pp, bool json_out) {
    const forms::HermitianForm a = form_file(pa);
    const forms::HermitianForm b = form_file(pb);
    const forms::LMat p = matrix_file(pp);
    const bool ok = forms::verify_isometry(a, b, p);
    json report;
    report["isometry"] = ok;
    emit(json_out, report, std::cout);
    return ok ? 0 : 1;
}

int run_hyperbolize(const std::string& pf, const std::string& pl,
                    bool quadratic, bool json_out) {
    const forms::LMat l = matrix_file(pl);
    forms::HyperbolicBasis hb = [&] {
        if (quadratic) {
            const json j = forms::load_json_file(pf);
            forms::UnitMonomial eps = forms::eps_minus_t();
            if (j.is_object() && j.contains("eps"))
                eps = forms::eps_from_string(j["eps"].get<std::string>());
            const forms::LMat rep = forms::matrix_from_json(
                j.is_object() && j.contains("gram") ? j["gram"] : j);
            return forms::hyperbolize(forms::QuadraticForm(rep, eps), l);
        }
        return forms::hyperbolize(form_file(pf), l);
    }();
    json report;
    report["basis"] = matrix_report(hb.basis);
    report["gram"] = matrix_report(hb.form.gram());
    emit(json_out, report, std::cout);
    return 0;
}

int run_selftest_cmd(bool json_out) {
    if (!json_out) {
        const int failures = forms::run_selftest(std::cout);
        return failures == 0 ? 0 : 1;
    }
    std::ostringstream log;
    const int failures = forms::run_selftest(log);
    json report;
    report["failures"] = failures;
    report["log"] = log.str();
    std::cout << report.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sesquilinear forms over Z[t, t^-1]"};
    app.require_subcommand(1);

    long deg_bound = 2;
    long coeff_bound = 2;
    long met_bound = 20;
    unsigned long long cap = 0;
    bool json_out = false;
    std::string sign = "plus";
    std::string in0, in1, in2, delta_s, b_s;
    bool quadratic = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_out, "emit a JSON report");
        sub->add_option("--search-cap", cap,
                        "candidate cap for bounded searches");
    };

    CLI::App* a_seifert =
        app.add_subcommand("analyze-seifert",
                           "alexander polynomial, pushed-in form, "
                           "metaboliser and hyperbolicity witness");
    a_seifert->add_option("input", in0, "seifert JSON file")->required();
    a_seifert->add_option("--coeff-bound", met_bound,
                          "entry bound for the metaboliser window");
    add_common(a_seifert);

    CLI::App* a_boundary = app.add_subcommand(
        "boundary-form", "boundary linking form on cokernel generators");
    a_boundary->add_option("input", in0, "form JSON file")->required();
    a_boundary
        ->add_option("--blanchfield-sign", sign,
                     "sign convention for the boundary pairing")
        ->check(CLI::IsMember({"plus", "minus"}));
    add_common(a_boundary);

    CLI::App* a_union =
        app.add_subcommand("union", "union of two forms along a boundary "
                                    "isometry, with Lagrangian report");
    a_union->add_option("form0", in0, "first form JSON file")->required();
    a_union->add_option("form1", in1, "second form JSON file")->required();
    a_union->add_option("gluing", in2, "gluing matrix JSON file")->required();
    add_common(a_union);

    CLI::App* a_aut = app.add_subcommand(
        "aut-blanchfield",
        "bounded enumeration of isometry classes of a cyclic linking form");
    a_aut->add_option("--delta", delta_s, "order polynomial")->required();
    a_aut->add_option("--b", b_s, "numerator of the pairing value")
        ->required();
    a_aut->add_option("--deg-bound", deg_bound, "alphabet degree window");
    a_aut->add_option("--coeff-bound", coeff_bound,
                      "alphabet coefficient window");
    add_common(a_aut);

    CLI::App* a_verify = app.add_subcommand(
        "verify-isometry", "check P^T A1 conj(P) = A0 with unit determinant");
    a_verify->add_option("form0", in0, "target form JSON file")->required();
    a_verify->add_option("form1", in1, "source form JSON file")->required();
    a_verify->add_option("matrix", in2, "candidate isometry JSON file")
        ->required();
    add_common(a_verify);

    CLI::App* a_hyp = app.add_subcommand(
        "hyperbolize", "complete a Lagrangian to a standard hyperbolic basis");
    a_hyp->add_option("form", in0, "form JSON file")->required();
    a_hyp->add_option("lagrangian", in1, "lagrangian basis JSON file")
        ->required();
    a_hyp->add_flag("--quadratic", quadratic,
                    "treat the input as a quadratic representative");
    add_common(a_hyp);

    CLI::App* a_self =
        app.add_subcommand("selftest", "run the invariant corpus");
    add_common(a_self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cap == 0) cap = env_search_cap();
        forms::SearchBounds bounds{deg_bound, coeff_bound, cap};
        if (a_seifert->parsed())
            return run_analyze_seifert(in0, met_bound, cap, json_out);
        if (a_boundary->parsed()) return run_boundary_form(in0, sign, json_out);
        if (a_union->parsed()) return run_union(in0, in1, in2, json_out);
        if (a_aut->parsed()) return run_aut(delta_s, b_s, bounds, json_out);
        if (a_verify->parsed())
            return run_verify_isometry(in0, in1, in2, json_out);
        if (a_hyp->parsed())
            return run_hyperbolize(in0, in1, quadratic, json_out);
        if (a_self->parsed()) return run_selftest_cmd(json_out);
        return 2;
    } catch (const forms::parse_error& e) {
        if (json_out)
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const forms::resource_bound_exceeded& e) {
        if (json_out)
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const forms::error& e) {
        if (json_out)
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
