#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"
#include "qa3/poly.hpp"

namespace qa3 {

/// A graded algebra presentation: field, ordered generators, homogeneous
/// relations. Relations are stored monic; zero relations are dropped (the
/// flag records that this happened). Every pipeline consumes this type.
struct Presentation {
    Field field = Field::rationals();
    std::vector<std::string> gens;
    std::vector<Poly> relations;
    bool dropped_zero_relations = false;

    size_t num_gens() const { return gens.size(); }

    bool is_quadratic() const {
        for (const Poly& r : relations)
            if (r.is_zero() || r.degree() != 2) return false;
        return true;
    }

    int max_relation_degree() const {
        int d = 0;
        for (const Poly& r : relations)
            if (!r.is_zero()) d = std::max(d, r.degree());
        return d;
    }
};

/// Normalizes a raw relation list: validates homogeneity and letter range,
/// drops zeros, scales monic.
inline Presentation make_presentation(Field field, std::vector<std::string> gens,
                                      const std::vector<Poly>& raw_relations) {
    Presentation P;
    P.field = field;
    P.gens = std::move(gens);
    for (const Poly& r : raw_relations) {
        if (r.is_zero()) {
            P.dropped_zero_relations = true;
            continue;
        }
        if (!homogeneous_degree(r))
            throw InhomogeneousRelations("relation mixes degrees: every relation must be homogeneous");
        for (const auto& [w, c] : r.terms) {
            field.check(c);
            for (int i = 0; i < w.degree(); ++i)
                if (static_cast<size_t>(w.letter(i)) >= P.gens.size())
                    throw Error("relation uses a generator index beyond the declared alphabet");
        }
        P.relations.push_back(monicize(r, field));
    }
    return P;
}

/// Presentation file form:
///   field Q
///   gens x y z
///   <one relation per line>
inline std::string print_presentation(const Presentation& P) {
    std::ostringstream out;
    out << "field " << P.field.spec_string() << "\n";
    out << "gens";
    for (const std::string& g : P.gens) out << " " << g;
    out << "\n";
    for (const Poly& r : P.relations) out << poly_to_string(r, P.gens, P.field) << "\n";
    return out.str();
}

}  // namespace qa3
