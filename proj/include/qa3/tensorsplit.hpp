#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"
#include "qa3/koszul.hpp"
#include "qa3/linalg.hpp"

namespace qa3 {

/// A subspace of V (x) V for dim V = 3, held as a reduced row-echelon basis
/// in the monomial coordinates x_i x_j -> 3i+j. Decision procedures require
/// a finite field.
struct TensorSubspace {
    Field field = Field::rationals();
    std::vector<SparseVec> basis;  // reduced echelon rows

    int dim() const { return static_cast<int>(basis.size()); }
};

inline TensorSubspace tensor_subspace_from_rows(const Field& F, const std::vector<SparseVec>& rows) {
    TensorSubspace R;
    R.field = F;
    R.basis = rref(rows, F);
    return R;
}

/// Builds the subspace spanned by degree-2 polynomials (3 generators).
inline TensorSubspace tensor_subspace(const Presentation& P) {
    if (P.num_gens() != 3) throw WrongDimension("tensor decision procedures need exactly 3 generators");
    if (!P.is_quadratic()) throw WrongDimension("spanning tensors must be homogeneous of degree 2");
    return tensor_subspace_from_rows(P.field, relation_rows(P));
}

using Vec3 = std::array<Scalar, 3>;

/// Projective points of the 3-dimensional space over a finite field, with
/// first nonzero coordinate 1, in ascending lexicographic order of the
/// coordinate codes: (0,0,1) < (0,1,*) < (1,*,*).
inline std::vector<Vec3> projective_points(const Field& F) {
    if (!F.finite()) throw InfiniteFieldUnsupported();
    const std::uint64_t q = F.size();
    std::vector<Vec3> out;
    out.push_back({F.zero(), F.zero(), F.one()});
    for (std::uint64_t a = 0; a < q; ++a)
        out.push_back({F.zero(), F.one(), F.element_from_code(a)});
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            out.push_back({F.one(), F.element_from_code(a), F.element_from_code(b)});
    return out;
}

/// u (x) v in the 9-dimensional coordinates.
inline SparseVec tensor_of(const Vec3& u, const Vec3& v, const Field& F) {
    SparseVec out;
    for (int i = 0; i < 3; ++i) {
        if (F.is_zero(u[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < 3; ++j) {
            Scalar c = F.mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
            if (!F.is_zero(c)) out.emplace_back(3 * i + j, c);
        }
    }
    return out;
}

enum class Side { left, right };  // left: L (x) V, right: V (x) L

inline std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

struct P1Witness {
    Vec3 point;
    Side side;
};

struct P2Witness {
    Vec3 point;
    Side side;
};

struct P3Witness {
    std::array<Vec3, 3> rows;  // matrix of T, row i = coordinates of T e_i
};

namespace detail {

inline void require_decision_input(const TensorSubspace& R) {
    if (!R.field.finite()) throw InfiniteFieldUnsupported();
    if (R.dim() != 6)
        throw WrongDimension("trichotomy decisions need a 6-dimensional subspace, got dimension " +
                             std::to_string(R.dim()));
}

inline std::array<SparseVec, 3> side_tensors(const Vec3& v, Side side, const Field& F) {
    std::array<Vec3, 3> es = {Vec3{F.one(), F.zero(), F.zero()},
                              Vec3{F.zero(), F.one(), F.zero()},
                              Vec3{F.zero(), F.zero(), F.one()}};
    std::array<SparseVec, 3> out;
    for (int i = 0; i < 3; ++i)
        out[static_cast<size_t>(i)] = side == Side::left ? tensor_of(v, es[static_cast<size_t>(i)], F)
                                                         : tensor_of(es[static_cast<size_t>(i)], v, F);
    return out;
}

}  // namespace detail

/// Searches for a line L with (L (x) V) + R or (V (x) L) + R a direct sum
/// filling the whole 9-dimensional space. Points are scanned in the fixed
/// projective order, the left side first for each point.
inline std::optional<P1Witness> check_P1(const TensorSubspace& R) {
    detail::require_decision_input(R);
    const Field& F = R.field;
    for (const Vec3& v : projective_points(F)) {
        for (Side side : {Side::left, Side::right}) {
            Echelon e(F);
            for (const SparseVec& r : R.basis) e.insert(r);
            int added = 0;
            for (const SparseVec& t : detail::side_tensors(v, side, F))
                added += e.insert(t) ? 1 : 0;
            if (added == 3 && e.rank() == 9) return P1Witness{v, side};
        }
    }
    return std::nullopt;
}

/// Searches for a line L with L (x) V or V (x) L contained in R.
inline std::optional<P2Witness> check_P2(const TensorSubspace& R) {
    detail::require_decision_input(R);
    const Field& F = R.field;
    Echelon e(F);
    for (const SparseVec& r : R.basis) e.insert(r);
    for (const Vec3& v : projective_points(F)) {
        for (Side side : {Side::left, Side::right}) {
            bool inside = true;
            for (const SparseVec& t : detail::side_tensors(v, side, F))
                if (!e.contains(t)) { inside = false; break; }
            if (inside) return P2Witness{v, side};
        }
    }
    return std::nullopt;
}

/// Searches for an invertible T with R = span{v (x) Tv}. Matrices are scanned
/// in row-major lexicographic order of entry codes; rows are pruned as soon
/// as the constraints they already determine fail, which keeps the full
/// GL(3,q) sweep fast. Over characteristic 2 the defining span is probed on
/// every projective point (the polarization shortcut degenerates); otherwise
/// the six polarized generators e_i (x) Te_i and e_i (x) Te_j + e_j (x) Te_i
/// suffice.
inline std::optional<P3Witness> check_P3(const TensorSubspace& R) {
    detail::require_decision_input(R);
    const Field& F = R.field;
    if (F.size() > 5) throw FieldTooLarge("GL(3,q) enumeration is limited to q <= 5");
    const std::uint64_t q = F.size();
    const bool char2 = F.characteristic() == 2;

    Echelon inR(F);
    for (const SparseVec& r : R.basis) inR.insert(r);

    std::vector<Vec3> rows(static_cast<size_t>(q * q * q));
    for (std::uint64_t code = 0; code < q * q * q; ++code)
        rows[static_cast<size_t>(code)] = {F.element_from_code(code / (q * q)),
                                           F.element_from_code(code / q % q),
                                           F.element_from_code(code % q)};

    auto apply = [&](const std::array<const Vec3*, 3>& T, const Vec3& v) {
        Vec3 out = {F.zero(), F.zero(), F.zero()};
        for (int i = 0; i < 3; ++i) {
            if (F.is_zero(v[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < 3; ++j)
                out[static_cast<size_t>(j)] = F.add(
                    out[static_cast<size_t>(j)],
                    F.mul(v[static_cast<size_t>(i)], (*T[static_cast<size_t>(i)])[static_cast<size_t>(j)]));
        }
        return out;
    };
    auto vTv_in_R = [&](const std::array<const Vec3*, 3>& T, const Vec3& v) {
        return inR.contains(tensor_of(v, apply(T, v), F));
    };

    // test vectors grouped by the highest generator row they involve
    std::array<std::vector<Vec3>, 3> levels;
    if (char2) {
        // group each point by the last generator row it involves, so the
        // membership tests can prune row prefixes of T
        for (const Vec3& p : projective_points(F)) {
            int last = !F.is_zero(p[2]) ? 2 : (!F.is_zero(p[1]) ? 1 : 0);
            levels[static_cast<size_t>(last)].push_back(p);
        }
    } else {
        levels[0] = {Vec3{F.one(), F.zero(), F.zero()}};
        levels[1] = {Vec3{F.zero(), F.one(), F.zero()}, Vec3{F.one(), F.one(), F.zero()}};
        levels[2] = {Vec3{F.zero(), F.zero(), F.one()}, Vec3{F.one(), F.zero(), F.one()},
                     Vec3{F.zero(), F.one(), F.one()}};
    }
    // Over characteristic != 2 the level vectors e_i+e_j probe the polarized
    // sums (e_i+e_j) (x) T(e_i+e_j) = e_i(x)Te_i + e_j(x)Te_j + polarized term,
    // so membership of all level vectors is equivalent to membership of the
    // six canonical generators.

    auto as_dense = [](const Vec3& v) { return std::vector<Scalar>{v[0], v[1], v[2]}; };
    for (const Vec3& r0 : rows) {
        Echelon rk0(F);
        if (!rk0.insert(sparse_from_dense(as_dense(r0), F))) continue;  // zero row
        std::array<const Vec3*, 3> T = {&r0, nullptr, nullptr};
        bool ok0 = true;
        for (const Vec3& v : levels[0])
            if (!vTv_in_R(T, v)) { ok0 = false; break; }
        if (!ok0) continue;
        for (const Vec3& r1 : rows) {
            Echelon rk1 = rk0;
            if (!rk1.insert(sparse_from_dense(as_dense(r1), F))) continue;  // dependent rows
            T[1] = &r1;
            bool ok1 = true;
            for (const Vec3& v : levels[1])
                if (!vTv_in_R(T, v)) { ok1 = false; break; }
            if (!ok1) continue;
            for (const Vec3& r2 : rows) {
                Echelon rk2 = rk1;
                if (!rk2.insert(sparse_from_dense(as_dense(r2), F))) continue;  // singular T
                T[2] = &r2;
                bool ok2 = true;
                for (const Vec3& v : levels[2])
                    if (!vTv_in_R(T, v)) { ok2 = false; break; }
                if (!ok2) continue;
                // all of span{v (x) Tv} lies inside R; equality needs rank 6
                Echelon span(F);
                int rank6 = 0;
                for (int lvl = 0; lvl < 3; ++lvl)
                    for (const Vec3& v : levels[static_cast<size_t>(lvl)])
                        rank6 += span.insert(tensor_of(v, apply(T, v), F)) ? 1 : 0;
                if (rank6 != 6) continue;
                return P3Witness{{r0, r1, r2}};
            }
        }
    }
    return std::nullopt;
}

struct TrichotomyReport {
    std::optional<P1Witness> p1;
    std::optional<P2Witness> p2;
    std::optional<P3Witness> p3;
    /// All three conditions failed over a field with at least 4 elements,
    /// which would contradict the trichotomy.
    bool violation = false;
};

inline TrichotomyReport trichotomy_report(const TensorSubspace& R) {
    TrichotomyReport rep;
    rep.p1 = check_P1(R);
    rep.p2 = check_P2(R);
    rep.p3 = check_P3(R);
    rep.violation = !rep.p1 && !rep.p2 && !rep.p3 && R.field.size() >= 4;
    return rep;
}

}  // namespace qa3
