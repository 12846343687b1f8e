#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/hilbert.hpp"
#include "qa3/parser.hpp"
#include "qa3/presentation.hpp"
#include "qa3/series.hpp"

namespace qa3 {

/// A named presentation with the expected data the golden test suite
/// recomputes: Groebner extras, Hilbert series, and (when known) the span of
/// the dual relations.
struct CatalogEntry {
    std::string name;
    std::string provenance;
    Field default_field = Field::rationals();
    bool needs_alpha = false;

    /// Relation strings for fixed entries; alpha entries use the builder.
    std::vector<std::string> relations;
    std::function<std::vector<std::string>(const Field&, const Scalar&)> relation_builder;

    std::optional<int> series_class;          // j when the series is H_j
    std::optional<RationalForm> series_form;  // closed form of the series
    std::vector<std::string> expected_extras; // completed basis minus relations
    std::string extras_note;                  // set when the extras form an infinite family

    std::vector<std::string> expected_dual;   // span of the dual relations, when tabulated
    std::function<std::vector<std::string>(const Field&, const Scalar&)> dual_builder;
    std::vector<std::string> expected_dual_extras;
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    const Field Q = Field::rationals();

    auto fixed = [&](std::string name, std::string provenance, std::vector<std::string> rels,
                     std::optional<int> cls, std::optional<RationalForm> form,
                     std::vector<std::string> extras) {
        CatalogEntry e;
        e.name = std::move(name);
        e.provenance = std::move(provenance);
        e.default_field = Q;
        e.relations = std::move(rels);
        e.series_class = cls;
        e.series_form = std::move(form);
        e.expected_extras = std::move(extras);
        out.push_back(std::move(e));
        return out.size() - 1;
    };

    // --- the eleven series witnesses -------------------------------------
    fixed("A1", "series witness table, row 1",
          {"x*x - z*x", "x*y - z*z", "x*z", "y*x", "y*y - z*y", "y*z"},
          1, hseries_form(1), {"z*z*x", "z*z*y", "z*z*z"});
    fixed("A2", "series witness table, row 2",
          {"x*x", "y*x", "y*y", "z*x", "z*y", "z*z"},
          2, hseries_form(2), {});
    fixed("A3", "series witness table, row 3",
          {"x*x - z*x", "x*y", "x*z", "y*x", "y*y - z*y", "y*z"},
          3, hseries_form(3), {"z*z*x", "z*z*y"});
    fixed("A4", "series witness table, row 4",
          {"x*x", "x*y", "x*z - z*z", "y*x", "y*y", "y*z - z*z"},
          4, hseries_form(4), {"z*z*z"});
    fixed("A5", "series witness table, row 5",
          {"x*x - y*x", "x*y", "y*y", "y*z", "z*x", "z*z"},
          5, hseries_form(5), {"z*y*x"});
    fixed("A6", "series witness table, row 6",
          {"x*z - y*z", "x*y", "y*x", "y*y", "z*x", "z*z"},
          6, hseries_form(6), {"z*y*z"});
    fixed("A7", "series witness table, row 7",
          {"x*x", "x*y", "x*z", "y*y", "z*x", "z*y"},
          7, hseries_form(7), {});
    fixed("A8", "series witness table, row 8",
          {"x*y", "x*z", "y*x", "y*z", "z*x", "z*y"},
          8, hseries_form(8), {});
    fixed("A9", "series witness table, row 9",
          {"x*x", "x*z", "y*x", "z*x", "z*y", "z*z"},
          9, hseries_form(9), {});
    fixed("A10", "series witness table, row 10",
          {"x*x", "x*y", "x*z", "y*x", "y*z", "z*x"},
          10, hseries_form(10), {});
    fixed("A11", "series witness table, row 11",
          {"x*x", "x*y", "x*z", "y*x", "y*y", "z*x"},
          11, hseries_form(11), {});

    // --- the headline duality chain --------------------------------------
    {
        // H_B = 1 / H5(-t): B is the Koszul三 witness dual to A5
        size_t i = fixed("B", "headline three-relation algebra",
                         {"x*x + y*x", "x*z", "z*y"},
                         std::nullopt, RationalForm({1}, {1, -3, 3, -2, 1}), {});
        out[i].extras_note = "x*y^k*x + y^(k+1)*x for k >= 1 (infinite family, observed up to the truncation degree)";
        out[i].expected_dual = {"x*x - y*x", "x*y", "y*y", "y*z", "z*x", "z*z"};
    }
    {
        size_t i = fixed("C", "second three-relation algebra",
                         {"x*x", "x*z + y*z", "z*y"},
                         std::nullopt, RationalForm({1, 1}, {1, -2, 0, 1, -1}), {"x*y*z"});
        out[i].expected_dual = {"x*z - y*z", "x*y", "y*x", "y*y", "z*x", "z*z"};
    }
    {
        size_t i = fixed("B_sub", "image of B under the substitution y -> x+y",
                         {"x*z", "y*x", "z*x - z*y"},
                         std::nullopt, RationalForm({1}, {1, -3, 3, -2, 1}), {"z*y*z"});
        (void)i;
    }
    {
        size_t i = fixed("C_sub", "image of C under the substitution y -> x+y",
                         {"x*x", "y*z", "z*x - z*y"},
                         std::nullopt, RationalForm({1, 1}, {1, -2, 0, 1, -1}), {"z*y*x"});
        (void)i;
    }
    {
        size_t i = fixed("nonuko", "cube-type series with a non-matching dual",
                         {"x*x", "x*z + y*y + z*x", "x*y + y*x + z*z"},
                         std::nullopt, RationalForm({1}, {1, -3, 3, -1}),
                         {"y*y*z - z*y*y", "y*z*z - z*z*y"});
        out[i].expected_dual = {"y*z", "z*y", "y*y - z*x", "x*z - z*x", "x*y - z*z", "y*x - z*z"};
        out[i].expected_dual_extras = {"z*x*x", "z*z*x", "z*z*z"};
    }

    // --- non-Koszul witnesses with Koszul-looking series ------------------
    {
        size_t i = fixed("B2", "alpha family table, row 2",
                         {"x*x + y*z", "x*z", "y*x", "y*y + z*x", "z*y", "z*z"},
                         2, hseries_form(2), {"x*y*z - z*x*y", "y*z*x - z*x*y"});
        out[i].expected_dual = {"x*x - y*z", "x*y", "y*y - z*x"};
    }
    {
        CatalogEntry e;
        e.name = "B5";
        e.provenance = "alpha family table, row 5";
        e.default_field = Q;
        e.needs_alpha = true;
        e.relation_builder = [](const Field& F, const Scalar& a) {
            const std::string A = F.format(a);
            const std::string C = F.format(F.inv(F.sub(F.one(), a)));  // 1/(1-alpha)
            return std::vector<std::string>{
                "x*x - z*x", "x*y - z*x", "y*x - z*x", "y*y - z*x",
                "x*z + " + A + "*z*x - " + C + "*z*z",
                "y*z + " + A + "*z*x - " + C + "*z*z"};
        };
        e.series_class = 5;
        e.series_form = hseries_form(5);
        e.expected_extras = {"z*z*x", "z*z*z*z"};
        e.dual_builder = [](const Field& F, const Scalar& a) {
            const std::string D = F.format(F.sub(F.one(), a));             // 1-alpha
            const std::string E = F.format(F.mul(a, F.sub(F.one(), a)));   // alpha(1-alpha)
            return std::vector<std::string>{
                "z*y",
                "x*z + y*z + " + D + "*z*z",
                "x*x + x*y + y*x + y*y + z*x + " + E + "*z*z"};
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "B6";
        e.provenance = "alpha family table, row 6";
        e.default_field = Q;
        e.needs_alpha = true;
        e.relation_builder = [](const Field& F, const Scalar& a) {
            const std::string A = F.format(a);
            return std::vector<std::string>{
                "x*x - " + A + "*z*x", "x*y - z*y", "y*x",
                "x*z - " + A + "*z*x", "y*z", "y*y"};
        };
        e.series_class = 6;
        e.series_form = hseries_form(6);
        e.expected_extras = {"z*z*x", "z*z*z*y"};
        e.dual_builder = [](const Field& F, const Scalar& a) {
            const std::string IA = F.format(F.inv(a));  // 1/alpha
            return std::vector<std::string>{
                "x*x + x*z + " + IA + "*z*x", "x*y + z*y", "z*z"};
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "B7";
        e.provenance = "alpha family table, row 7";
        e.default_field = Q;
        e.needs_alpha = true;
        e.relation_builder = [](const Field& F, const Scalar& a) {
            const std::string A = F.format(a);
            return std::vector<std::string>{
                "x*x - z*x", "x*y", "y*x",
                "x*z - " + A + "*z*x", "y*z", "y*y"};
        };
        e.series_class = 7;
        e.series_form = hseries_form(7);
        e.expected_extras = {"z*z*x"};
        e.dual_builder = [](const Field& F, const Scalar& a) {
            const std::string A = F.format(a);
            return std::vector<std::string>{
                "x*x + " + A + "*x*z + z*x", "z*y", "z*z"};
        };
        out.push_back(std::move(e));
    }

    // --- the char-2 trichotomy example ------------------------------------
    {
        CatalogEntry e;
        e.name = "Z2_example";
        e.provenance = "char-2 example defeating all three trichotomy conditions";
        e.default_field = Field::prime(2);
        e.relations = {"x*x", "y*y", "z*z", "y*z + z*y",
                       "x*y + z*x + z*y", "x*z + y*x + z*y"};
        out.push_back(std::move(e));
    }

    // --- the three normal-form families -----------------------------------
    auto q_family = [&](std::string name, std::string h, std::vector<std::string> base,
                        std::optional<int> cls, std::vector<std::string> extras) {
        base.push_back(std::move(h));
        fixed(std::move(name), "normal-form family entry", std::move(base), cls,
              cls ? std::optional<RationalForm>(hseries_form(*cls)) : std::nullopt,
              std::move(extras));
    };
    const std::vector<std::string> q1 = {"x*x", "x*y", "x*z", "y*x", "z*x"};
    const std::vector<std::string> q2 = {"x*x", "x*y", "x*z", "y*y", "z*y"};
    const std::vector<std::string> q3 = {"x*x", "x*y", "x*z", "y*y", "z*z"};
    q_family("Q1_yy", "y*y", q1, 11, {});
    {
        CatalogEntry e;
        e.name = "Q1_yz_azy";
        e.provenance = "normal-form family entry, skew parameter";
        e.default_field = Q;
        e.needs_alpha = true;
        e.relation_builder = [q1](const Field& F, const Scalar& a) {
            std::vector<std::string> rels = q1;
            rels.push_back("y*z - " + F.format(a) + "*z*y");
            return rels;
        };
        e.series_class = 10;
        e.series_form = hseries_form(10);
        out.push_back(std::move(e));
    }
    q_family("Q1_yz_zy_zz", "y*z - z*y + z*z", q1, 10, {});
    // the prose also lists zzy, but its leading word contains the defining
    // relation zy, so the tip-reduced basis drops it
    q_family("Q2_yx_zz", "y*x - z*z", q2, 2, {"y*z*z", "z*z*x", "z*z*z"});
    q_family("Q2_yz_zx", "y*z - z*x", q2, 3, {"z*z*x"});
    q_family("Q2_yx", "y*x", q2, 9, {});
    q_family("Q2_yz", "y*z", q2, 7, {});
    q_family("Q2_zx", "z*x", q2, 7, {});
    q_family("Q2_zz", "z*z", q2, 2, {});
    q_family("Q3_yx_zx", "y*x + z*x", q3, 7, {"y*z*x"});
    q_family("Q3_yz_zy", "y*z + z*y", q3, 2, {});
    q_family("Q3_yx_zx_yz_zy", "y*x + z*x - y*z - z*y", q3, 1, {"y*z*x", "y*z*y", "z*y*z"});

    return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
    return names;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    std::string resolved = name == "counterexample_A" ? "B" : name;
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == resolved) return e;
    throw UnknownName(name);
}

namespace detail {

inline Scalar require_alpha(const CatalogEntry& e, const Field& F, const std::optional<Scalar>& alpha) {
    if (!alpha) throw InvalidParameter("entry " + e.name + " needs a parameter alpha");
    F.check(*alpha);
    if (F.is_zero(*alpha) || F.is_one(*alpha))
        throw InvalidParameter("alpha must differ from 0 and 1");
    return *alpha;
}

inline std::vector<Poly> parse_all(const std::vector<std::string>& rels,
                                   const std::vector<std::string>& gens, const Field& F) {
    std::vector<Poly> out;
    out.reserve(rels.size());
    for (const std::string& s : rels) out.push_back(parse_poly(s, gens, F));
    return out;
}

}  // namespace detail

/// Fully instantiated presentation for a catalog entry over the requested
/// field (entry default when absent). Alpha entries validate the parameter
/// and bake it into the relation strings, which then pass through the same
/// grammar the CLI uses.
inline Presentation catalog_presentation(const CatalogEntry& e,
                                         std::optional<Field> field = std::nullopt,
                                         std::optional<Scalar> alpha = std::nullopt) {
    const Field F = field.value_or(e.default_field);
    std::vector<std::string> gens = {"x", "y", "z"};
    std::vector<std::string> rels;
    if (e.needs_alpha) {
        Scalar a = detail::require_alpha(e, F, alpha);
        try {
            rels = e.relation_builder(F, a);
        } catch (const DivisionByZero&) {
            throw InvalidParameter("alpha makes a coefficient denominator vanish over " + F.spec_string());
        }
    } else {
        if (alpha) throw InvalidParameter("entry " + e.name + " takes no parameter");
        rels = e.relations;
    }
    return make_presentation(F, gens, detail::parse_all(rels, gens, F));
}

inline Presentation catalog_presentation(const std::string& name,
                                         std::optional<Field> field = std::nullopt,
                                         std::optional<Scalar> alpha = std::nullopt) {
    return catalog_presentation(catalog_entry(name), field, alpha);
}

/// The tabulated dual relations of an entry, instantiated over the field.
inline std::vector<Poly> catalog_expected_dual(const CatalogEntry& e, const Field& F,
                                               std::optional<Scalar> alpha = std::nullopt) {
    std::vector<std::string> gens = {"x", "y", "z"};
    if (e.dual_builder) {
        Scalar a = detail::require_alpha(e, F, alpha);
        return detail::parse_all(e.dual_builder(F, a), gens, F);
    }
    return detail::parse_all(e.expected_dual, gens, F);
}

/// Expected completed-basis extras, parsed over the field.
inline std::vector<Poly> catalog_expected_extras(const CatalogEntry& e, const Field& F) {
    return detail::parse_all(e.expected_extras, {"x", "y", "z"}, F);
}

}  // namespace qa3
