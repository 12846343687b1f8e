// qa3: computer-algebra toolkit for quadratic algebras on three generators.
//
// Subcommands compute noncommutative Groebner bases, Hilbert series, Koszul
// duals, numerical-Koszulity and exactness certificates, and the finite-field
// trichotomy decisions. Exit codes: 0 ok, 1 error, 2 research-grade alarm
// (a computation contradicting one of the classification statements).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qa3/catalog.hpp"
#include "qa3/groebner.hpp"
#include "qa3/hilbert.hpp"
#include "qa3/koszul.hpp"
#include "qa3/parser.hpp"
#include "qa3/presentation.hpp"
#include "qa3/sweep.hpp"
#include "qa3/tensorsplit.hpp"

using nlohmann::json;
using namespace qa3;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Presentation load(const std::string& path) { return parse_presentation(slurp(path)); }

json series_json(const Series& H) {
    json a = json::array();
    for (const Int& c : H.c) a.push_back(c.str());
    return a;
}

json series_json(const SignedSeries& H) {
    json a = json::array();
    for (const Int& c : H.c) a.push_back(c.str());
    return a;
}

std::string series_text(const std::vector<Int>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
    return s;
}

json envelope(const std::string& command, const std::string& status) {
    return json{{"tool", "qa3"}, {"command", command}, {"status", status}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void warn_dropped(const Presentation& P) {
    if (P.dropped_zero_relations)
        std::cerr << "warning: zero relations were dropped from the input\n";
}

struct Options {
    std::string file;
    int max_degree = 12;
    bool as_json = false;
};

int cmd_groebner(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    GBasis b = complete(P, o.max_degree);
    if (o.as_json) {
        json j = envelope("groebner", "ok");
        j["status_flag"] = b.complete() ? "complete" : "truncated";
        j["max_degree"] = b.truncation_degree;
        json elems = json::array();
        for (const Poly& g : b.elems) elems.push_back(poly_to_string(g, P.gens, P.field));
        j["basis"] = elems;
        emit(j);
    } else {
        std::cout << (b.complete() ? "complete Groebner basis ("
                                   : "Groebner basis truncated at degree ")
                  << (b.complete() ? std::to_string(b.elems.size()) + " elements)"
                                   : std::to_string(b.truncation_degree))
                  << "\n";
        for (const Poly& g : b.elems) std::cout << "  " << poly_to_string(g, P.gens, P.field) << "\n";
    }
    return 0;
}

int cmd_hilbert(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    GBasis b = complete(P, o.max_degree);
    Series H = hilbert_series(b, o.max_degree);
    std::optional<ClassifyResult> cls;
    if (P.num_gens() == 3 && P.is_quadratic() && o.max_degree >= 5) {
        try {
            ClassifyResult r = classify_33(P, o.max_degree);
            if (r.label != HClass::not_applicable) cls = r;
        } catch (const ClassificationConflict&) {
            throw;  // surfaced with exit code 2 by main()
        }
    }
    if (o.as_json) {
        json j = envelope("hilbert", "ok");
        j["coefficients"] = series_json(H);
        if (cls) {
            j["class"] = to_string(cls->label);
            j["closed_form"] = form_text(hseries_form(static_cast<int>(cls->label)));
        }
        emit(j);
    } else {
        std::cout << series_text(H.c) << "\n";
        if (cls)
            std::cout << "class: " << to_string(cls->label) << ", closed form "
                      << form_text(hseries_form(static_cast<int>(cls->label))) << "\n";
    }
    return 0;
}

int cmd_dual(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    Presentation D = koszul_dual(P);
    if (o.as_json) {
        json j = envelope("dual", "ok");
        j["field"] = D.field.spec_string();
        j["gens"] = D.gens;
        json rels = json::array();
        for (const Poly& r : D.relations) rels.push_back(poly_to_string(r, D.gens, D.field));
        j["relations"] = rels;
        emit(j);
    } else {
        std::cout << print_presentation(D);
    }
    return 0;
}

int cmd_classify(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    ClassifyResult r = classify_33(P, o.max_degree);
    if (o.as_json) {
        json j = envelope("classify", "ok");
        j["class"] = to_string(r.label);
        if (r.label != HClass::not_applicable) {
            j["coefficients"] = series_json(r.series);
            j["closed_form"] = form_text(hseries_form(static_cast<int>(r.label)));
        }
        emit(j);
    } else {
        std::cout << to_string(r.label) << "\n";
        if (r.label == HClass::H11)
            std::cout << "note: dimensions follow the Fibonacci recurrence a(n+2)=a(n+1)+a(n) from degree 2 on\n";
    }
    return 0;
}

int cmd_koszul_check(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    NumericalKoszulityReport rep = numerical_koszulity_check(P, o.max_degree);
    if (o.as_json) {
        json j = envelope("koszul-check", "ok");
        j["holds"] = rep.holds;
        j["max_degree"] = rep.degree;
        if (!rep.holds) j["first_mismatch_degree"] = rep.first_mismatch_degree;
        j["primal_series"] = series_json(rep.primal);
        j["inverse_series"] = series_json(rep.lhs);
        j["dual_series"] = series_json(rep.rhs);
        emit(j);
    } else {
        if (rep.holds) {
            std::cout << "OK to degree " << rep.degree << ": H_A(-t) * H_dual(t) = 1\n";
        } else {
            int d = rep.first_mismatch_degree;
            std::cout << "FAIL at degree " << d << " (" << rep.lhs[d].str() << " vs "
                      << rep.rhs[d].str() << ")\n";
        }
        std::cout << "1/H_A(-t): " << series_text(rep.lhs.c) << "\n";
        std::cout << "H_dual:    " << series_text(rep.rhs.c) << "\n";
    }
    return 0;
}

int cmd_exactness(const Options& o, const std::string& complex_path) {
    Presentation P = load(o.file);
    warn_dropped(P);
    ComplexSpec spec = parse_complex_spec(slurp(complex_path));
    ComplexReport rep = verify_complex(P, spec, o.max_degree);
    if (o.as_json) {
        json j = envelope("exactness", "ok");
        j["complex"] = spec.name;
        j["compositions_zero"] = rep.compositions_zero;
        j["nonzero_compositions"] = rep.nonzero_compositions;
        j["exact"] = rep.exact;
        j["max_degree"] = rep.degree;
        json rows = json::array();
        for (const auto& p : rep.positions)
            rows.push_back(json{{"position", p.position},
                                {"rank", p.rank},
                                {"degree", p.degree},
                                {"dim", p.dim.str()},
                                {"incoming_rank", p.incoming_rank},
                                {"outgoing_rank", p.outgoing_rank},
                                {"exact", p.exact}});
        j["positions"] = rows;
        emit(j);
    } else {
        std::cout << "complex " << spec.name << ": compositions "
                  << (rep.compositions_zero ? "zero" : "NONZERO") << ", degree-wise exactness to "
                  << rep.degree << ": " << (rep.exact ? "exact" : "FAILS") << "\n";
        for (const std::string& s : rep.nonzero_compositions) std::cout << "  " << s << "\n";
        std::cout << "position degree dim in out exact\n";
        for (const auto& p : rep.positions)
            std::cout << "  " << p.position << " " << p.degree << " " << p.dim.str() << " "
                      << p.incoming_rank << " " << p.outgoing_rank << " "
                      << (p.exact ? "yes" : "NO") << "\n";
    }
    return 0;
}

int cmd_annihilator(const Options& o, const std::string& a_text, const std::string& b_text) {
    Presentation P = load(o.file);
    warn_dropped(P);
    GBasis basis = complete(P, o.max_degree + 1);
    Poly a = parse_poly(a_text, P.gens, P.field);
    std::optional<Poly> b;
    if (!b_text.empty()) b = parse_poly(b_text, P.gens, P.field);
    auto reports = annihilator_image_check(basis, a, b, o.max_degree, P.field);
    bool all = true;
    for (const auto& r : reports) all = all && r.equal;
    if (o.as_json) {
        json j = envelope("annihilator", "ok");
        j["a"] = a_text;
        if (b) j["b"] = b_text;
        j["all_equal"] = all;
        json rows = json::array();
        for (const auto& r : reports)
            rows.push_back(json{{"degree", r.degree},
                                {"kernel_dim", r.kernel_dim},
                                {"image_dim", r.image_dim},
                                {"equal", r.equal}});
        j["degrees"] = rows;
        emit(j);
    } else {
        std::cout << "kernel(right mult by " << a_text << ") vs "
                  << (b ? "image(right mult by " + b_text + ")" : "zero space") << "\n";
        std::cout << "degree ker im equal\n";
        for (const auto& r : reports)
            std::cout << "  " << r.degree << " " << r.kernel_dim << " " << r.image_dim << " "
                      << (r.equal ? "yes" : "NO") << "\n";
        std::cout << (all ? "equal at every degree\n" : "subspaces differ at some degree\n");
    }
    return 0;
}

int cmd_trichotomy(const Options& o) {
    Presentation P = load(o.file);
    warn_dropped(P);
    TensorSubspace R = tensor_subspace(P);
    TrichotomyReport rep = trichotomy_report(R);
    auto point_text = [&](const Vec3& v) {
        return "(" + P.field.format(v[0]) + ", " + P.field.format(v[1]) + ", " +
               P.field.format(v[2]) + ")";
    };
    if (o.as_json) {
        json j = envelope("trichotomy", rep.violation ? "alarm" : "ok");
        j["field"] = P.field.spec_string();
        if (rep.p1) j["P1"] = json{{"point", point_text(rep.p1->point)}, {"side", to_string(rep.p1->side)}};
        else j["P1"] = nullptr;
        if (rep.p2) j["P2"] = json{{"point", point_text(rep.p2->point)}, {"side", to_string(rep.p2->side)}};
        else j["P2"] = nullptr;
        if (rep.p3) {
            json rows = json::array();
            for (const Vec3& r : rep.p3->rows) {
                json row = json::array();
                for (const Scalar& s : r) row.push_back(P.field.format(s));
                rows.push_back(row);
            }
            j["P3"] = json{{"matrix_rows", rows}};
        } else {
            j["P3"] = nullptr;
        }
        j["violation"] = rep.violation;
        emit(j);
    } else {
        std::cout << "P1: " << (rep.p1 ? point_text(rep.p1->point) + " " + to_string(rep.p1->side) : "none")
                  << ", P2: " << (rep.p2 ? point_text(rep.p2->point) + " " + to_string(rep.p2->side) : "none")
                  << ", P3: " << (rep.p3 ? "witness found" : "none") << "\n";
        if (rep.violation)
            std::cout << "ALARM: all three conditions fail over a field with at least 4 elements\n";
    }
    return rep.violation ? 2 : 0;
}

int cmd_sweep(const std::string& field_spec, int count, std::uint64_t seed, int regime,
              int max_degree, const std::string& out_path, bool as_json) {
    Field F = parse_field_spec(field_spec);
    SweepResult res = run_sweep(F, count, seed, regime, max_degree);
    json j = envelope("sweep", res.conflicts ? "alarm" : "ok");
    j["field"] = F.spec_string();
    j["count"] = res.count;
    j["seed"] = res.seed;
    j["regime"] = res.regime;
    j["max_degree"] = res.max_degree;
    j["histogram"] = res.histogram;
    j["conflicts"] = res.conflicts;
    if (!res.conflict_messages.empty()) j["conflict_messages"] = res.conflict_messages;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
    if (as_json) {
        emit(j);
    } else {
        std::cout << "sweep over " << F.spec_string() << ", " << count << " samples, seed " << seed
                  << ", regime " << regime << "\n";
        for (const auto& [k, v] : res.histogram) std::cout << "  " << k << ": " << v << "\n";
        std::cout << "conflicts: " << res.conflicts << "\n";
    }
    return res.conflicts ? 2 : 0;
}

int cmd_catalog(const std::string& name, const std::string& alpha_text,
                const std::string& field_spec, bool as_json) {
    if (name.empty()) {
        if (as_json) {
            json j = envelope("catalog", "ok");
            json list = json::array();
            for (const CatalogEntry& e : catalog_entries())
                list.push_back(json{{"name", e.name},
                                    {"provenance", e.provenance},
                                    {"needs_alpha", e.needs_alpha},
                                    {"default_field", e.default_field.spec_string()}});
            j["entries"] = list;
            emit(j);
        } else {
            for (const CatalogEntry& e : catalog_entries())
                std::cout << e.name << (e.needs_alpha ? " (needs --alpha)" : "") << "  ["
                          << e.provenance << "]\n";
        }
        return 0;
    }
    const CatalogEntry& e = catalog_entry(name);
    Field F = field_spec.empty() ? e.default_field : parse_field_spec(field_spec);
    std::optional<Scalar> alpha;
    if (!alpha_text.empty()) {
        Poly p = parse_poly(alpha_text, {}, F);
        if (p.terms.size() != 1 || !p.terms.begin()->first.empty())
            throw InvalidParameter("--alpha must be a scalar");
        alpha = p.terms.begin()->second;
    }
    Presentation P = catalog_presentation(e, F, alpha);
    if (as_json) {
        json j = envelope("catalog", "ok");
        j["name"] = e.name;
        j["provenance"] = e.provenance;
        j["field"] = F.spec_string();
        json rels = json::array();
        for (const Poly& r : P.relations) rels.push_back(poly_to_string(r, P.gens, P.field));
        j["relations"] = rels;
        if (e.series_class) j["series_class"] = "H" + std::to_string(*e.series_class);
        if (e.series_form) j["series_form"] = form_text(*e.series_form);
        j["expected_extras"] = e.expected_extras;
        if (!e.extras_note.empty()) j["extras_note"] = e.extras_note;
        emit(j);
    } else {
        std::cout << "# " << e.name << ": " << e.provenance << "\n";
        if (e.series_class) std::cout << "# series: H" << *e.series_class << "\n";
        if (!e.expected_extras.empty()) {
            std::cout << "# completed basis adds:";
            for (const std::string& s : e.expected_extras) std::cout << " " << s << ";";
            std::cout << "\n";
        }
        if (!e.extras_note.empty()) std::cout << "# completed basis adds: " << e.extras_note << "\n";
        std::cout << print_presentation(P);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computer algebra for quadratic algebras on three generators"};
    app.require_subcommand(1);

    Options o;
    std::string complex_path, a_text, b_text;
    std::string field_spec = "F5", out_path, cat_name, alpha_text, cat_field;
    int count = 100, regime = 33;
    std::uint64_t seed = 1;
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    auto add_file_cmd = [&](const std::string& name, const std::string& desc, bool with_degree) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("file", o.file, "presentation file")->required();
        if (with_degree) c->add_option("--max-degree", o.max_degree, "truncation degree (default 12)");
        return c;
    };

    CLI::App* groebner = add_file_cmd("groebner", "completed (possibly truncated) Groebner basis", true);
    CLI::App* hilbert = add_file_cmd("hilbert", "Hilbert series coefficients", true);
    CLI::App* dual = add_file_cmd("dual", "Koszul dual presentation", false);
    CLI::App* classify = add_file_cmd("classify", "match the series against the eleven classes", true);
    CLI::App* koszul = add_file_cmd("koszul-check", "numerical Koszulity certificate", true);
    CLI::App* exactness = add_file_cmd("exactness", "degree-wise exactness of an explicit complex", true);
    exactness->add_option("--complex", complex_path, "complex spec JSON file")->required();
    CLI::App* annihilator = add_file_cmd("annihilator", "kernel/image comparison per degree", true);
    annihilator->add_option("--a", a_text, "degree-1 element whose kernel is computed")->required();
    annihilator->add_option("--b", b_text, "degree-1 element whose image is compared");
    CLI::App* trichotomy = add_file_cmd("trichotomy", "P1/P2/P3 decisions over a finite field", false);

    CLI::App* sweep = app.add_subcommand("sweep", "classify random relation subspaces");
    sweep->add_option("--field", field_spec, "finite field spec, e.g. F5 or GF4")->required();
    sweep->add_option("--count", count, "number of samples")->required();
    sweep->add_option("--seed", seed, "base seed; sample i uses seed+i")->required();
    sweep->add_option("--regime", regime, "33 (classify) or 34 (collect series)");
    sweep->add_option("--max-degree", o.max_degree, "truncation degree (default 12)");
    sweep->add_option("--out", out_path, "write the JSON histogram to this file");

    CLI::App* catalog = app.add_subcommand("catalog", "list or dump built-in presentations");
    catalog->add_option("name", cat_name, "entry name (omit to list)");
    catalog->add_option("--alpha", alpha_text, "parameter for alpha families");
    catalog->add_option("--field", cat_field, "field override, e.g. Q, F7, GF4");

    CLI11_PARSE(app, argc, argv);
    o.as_json = as_json;

    try {
        if (groebner->parsed()) return cmd_groebner(o);
        if (hilbert->parsed()) return cmd_hilbert(o);
        if (dual->parsed()) return cmd_dual(o);
        if (classify->parsed()) return cmd_classify(o);
        if (koszul->parsed()) return cmd_koszul_check(o);
        if (exactness->parsed()) return cmd_exactness(o, complex_path);
        if (annihilator->parsed()) return cmd_annihilator(o, a_text, b_text);
        if (trichotomy->parsed()) return cmd_trichotomy(o);
        if (sweep->parsed()) return cmd_sweep(field_spec, count, seed, regime, o.max_degree, out_path, as_json);
        if (catalog->parsed()) return cmd_catalog(cat_name, alpha_text, cat_field, as_json);
    } catch (const ClassificationConflict& e) {
        std::cerr << "ALARM (classification conflict): " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
