#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "qa3/errors.hpp"
#include "qa3/groebner.hpp"
#include "qa3/hilbert.hpp"
#include "qa3/linalg.hpp"
#include "qa3/parser.hpp"
#include "qa3/poly.hpp"
#include "qa3/presentation.hpp"
#include "qa3/series.hpp"

namespace qa3 {

/// Coordinates of a quadratic relation in the monomial basis x_i x_j of the
/// degree-2 component: index n*i + j. Ascending index = descending monomial
/// order, so echelon pivots are leading words.
inline SparseVec relation_vector(const Poly& r, size_t num_gens) {
    SparseVec v;
    for (const auto& [w, c] : r.terms) {
        if (w.degree() != 2) throw Error("relation is not quadratic");
        v.emplace_back(static_cast<int>(num_gens) * w.letter(0) + w.letter(1), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

inline std::vector<SparseVec> relation_rows(const Presentation& P) {
    std::vector<SparseVec> rows;
    rows.reserve(P.relations.size());
    for (const Poly& r : P.relations) rows.push_back(relation_vector(r, P.num_gens()));
    return rows;
}

inline Poly poly_from_vector(const SparseVec& v, size_t num_gens, const Field& F) {
    Poly p;
    for (const auto& [idx, c] : v) {
        Word w{static_cast<int>(idx / static_cast<int>(num_gens)),
               static_cast<int>(idx % static_cast<int>(num_gens))};
        add_term(p.terms, w, c, F);
    }
    return p;
}

/// The dual quadratic presentation on the same generators: relations span
/// the orthogonal complement of the relation span under the monomial
/// delta-pairing, returned as the reduced-echelon basis of the null space.
inline Presentation koszul_dual(const Presentation& P) {
    if (!P.is_quadratic()) throw Error("Koszul dual requires a quadratic presentation");
    const int ambient = static_cast<int>(P.num_gens() * P.num_gens());
    std::vector<SparseVec> dual_rows = kernel_basis(relation_rows(P), ambient, P.field);
    std::vector<Poly> rels;
    rels.reserve(dual_rows.size());
    for (const SparseVec& v : dual_rows) rels.push_back(poly_from_vector(v, P.num_gens(), P.field));
    Presentation D = make_presentation(P.field, P.gens, rels);
    return D;
}

/// Right multiplication by a degree-1 element, written in the normal-word
/// bases: columns indexed by normal words of degree n, rows by normal words
/// of degree n+1. Column j holds the normal form of (word j) * v.
struct GradedMap {
    int source_degree = 0;
    std::vector<Word> src;  // decreasing monomial order
    std::vector<Word> dst;
    std::vector<SparseVec> cols;  // cols[j]: (row index, coefficient)
};

inline GradedMap right_mul_map(const GBasis& basis, const Poly& v, int n, const Field& F) {
    auto vd = homogeneous_degree(v);
    if (!vd || *vd != 1) throw Error("right multiplication element must be homogeneous of degree 1");
    if (n + 1 > basis.reliable_degree())
        throw DegreeBeyondTruncation("right multiplication map at degree " + std::to_string(n) +
                                     " needs normal words beyond the truncation degree");
    GradedMap M;
    M.source_degree = n;
    M.src = normal_words(basis, n);
    M.dst = normal_words(basis, n + 1);
    std::unordered_map<std::string, int> dst_index;
    dst_index.reserve(M.dst.size());
    for (size_t i = 0; i < M.dst.size(); ++i) dst_index.emplace(M.dst[i].letters, static_cast<int>(i));
    M.cols.reserve(M.src.size());
    for (const Word& w : M.src) {
        Poly prod;
        for (const auto& [g, c] : v.terms) add_term(prod.terms, w * g, c, F);
        Poly nf = reduce(prod, basis.elems, F);
        SparseVec col;
        for (const auto& [u, c] : nf.terms) {
            auto it = dst_index.find(u.letters);
            if (it == dst_index.end()) throw Error("normal form left the normal-word basis");
            col.emplace_back(it->second, c);
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        M.cols.push_back(std::move(col));
    }
    return M;
}

/// Rows of the matrix (each row a sparse vector over the source words).
inline std::vector<SparseVec> map_rows(const GradedMap& M) {
    std::vector<SparseVec> rows(M.dst.size());
    for (size_t j = 0; j < M.cols.size(); ++j)
        for (const auto& [r, c] : M.cols[j]) rows[static_cast<size_t>(r)].emplace_back(static_cast<int>(j), c);
    return rows;
}

inline int map_rank(const GradedMap& M, const Field& F) {
    return rank(M.cols, F);  // column rank == rank
}

struct NumericalKoszulityReport {
    bool holds = false;
    int degree = 0;                 // degree the check ran to
    int first_mismatch_degree = -1; // -1 when the identity holds
    SignedSeries lhs;               // 1 / H_A(-t)
    Series rhs;                     // H_{A^!}
    Series primal;                  // H_A
};

/// Checks the series identity H_A(-t) * H_{A^!}(t) = 1 up to degree D, with
/// both series computed by Groebner completion.
inline NumericalKoszulityReport numerical_koszulity_check(const Presentation& P, int D) {
    NumericalKoszulityReport rep;
    rep.degree = D;
    GBasis bA = complete(P, D);
    rep.primal = hilbert_series(bA, D);
    Presentation Pd = koszul_dual(P);
    GBasis bD = complete(Pd, D);
    rep.rhs = hilbert_series(bD, D);
    rep.lhs = invert_at_minus_t(rep.primal, D);
    SignedSeries prod = mul(at_minus_t(rep.primal), to_signed(rep.rhs), D);
    rep.holds = true;
    for (int n = 1; n <= D; ++n) {
        if (prod[n] != 0) {
            rep.holds = false;
            rep.first_mismatch_degree = n;
            break;
        }
    }
    return rep;
}

struct AnnihilatorDegreeReport {
    int degree = 0;
    int kernel_dim = 0;
    int image_dim = 0;
    bool equal = false;
};

/// For each n <= D compares the kernel of right multiplication by `a` at
/// degree n with the image of right multiplication by `b` arriving from
/// degree n-1 (the zero space when b is absent), as subspaces of the
/// degree-n component. Both sides are put in reduced row-echelon form.
inline std::vector<AnnihilatorDegreeReport> annihilator_image_check(
    const GBasis& basis, const Poly& a, const std::optional<Poly>& b, int D, const Field& F) {
    if (D + 1 > basis.reliable_degree())
        throw DegreeBeyondTruncation("annihilator check needs normal words beyond the truncation degree");
    std::vector<AnnihilatorDegreeReport> out;
    for (int n = 0; n <= D; ++n) {
        GradedMap Ma = right_mul_map(basis, a, n, F);
        std::vector<SparseVec> ker = kernel_basis(map_rows(Ma), static_cast<int>(Ma.src.size()), F);
        std::vector<SparseVec> img;
        if (b && n >= 1) {
            GradedMap Mb = right_mul_map(basis, *b, n - 1, F);
            img = rref(Mb.cols, F);
        }
        AnnihilatorDegreeReport r;
        r.degree = n;
        r.kernel_dim = static_cast<int>(ker.size());
        r.image_dim = static_cast<int>(img.size());
        r.equal = (ker == img);
        out.push_back(r);
    }
    return out;
}

/// A finite presentation of a complex of free graded modules
///   M_0 -> M_1 -> ... -> M_{m-1} = algebra -> K -> 0
/// listed left to right; module i has rank ranks[i] and is generated in
/// degree m-1-i. differentials[i] is the ranks[i] x ranks[i+1] matrix of
/// degree-1 entries mapping M_i -> M_{i+1} by right multiplication. When
/// tail is repeat_left the complex extends infinitely to the left by copies
/// of the leftmost differential.
struct ComplexSpec {
    enum class Tail { zero, repeat_left };
    std::string name;
    std::vector<int> ranks;
    std::vector<std::vector<std::vector<std::string>>> differentials;
    Tail tail = Tail::zero;
};

inline ComplexSpec parse_complex_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecShapeMismatch(std::string("complex spec is not valid JSON: ") + e.what());
    }
    ComplexSpec spec;
    try {
        spec.name = j.value("name", std::string("complex"));
        spec.ranks = j.at("ranks").get<std::vector<int>>();
        spec.differentials =
            j.at("differentials").get<std::vector<std::vector<std::vector<std::string>>>>();
        std::string tail = j.value("tail", std::string("zero"));
        if (tail == "zero") spec.tail = ComplexSpec::Tail::zero;
        else if (tail == "repeat_left") spec.tail = ComplexSpec::Tail::repeat_left;
        else throw SpecShapeMismatch("complex tail must be 'zero' or 'repeat_left'");
    } catch (const nlohmann::json::exception& e) {
        throw SpecShapeMismatch(std::string("complex spec shape: ") + e.what());
    }
    return spec;
}

struct ComplexPositionReport {
    int position = 0;      // generation degree of the module
    int rank = 0;
    int degree = 0;        // total degree inspected
    Int dim = 0;           // dimension of the module slice
    int incoming_rank = 0;
    int outgoing_rank = 0;
    bool exact = false;
};

struct ComplexReport {
    bool compositions_zero = false;
    std::vector<std::string> nonzero_compositions;  // descriptions, if any
    std::vector<ComplexPositionReport> positions;
    bool exact = true;
    int degree = 0;
};

namespace detail {

struct CheckedComplex {
    std::vector<std::vector<std::vector<Poly>>> diffs;  // parsed matrices
    std::vector<int> ranks;
    bool repeat = false;
};

inline CheckedComplex check_complex_shape(const Presentation& P, const ComplexSpec& spec) {
    CheckedComplex c;
    c.ranks = spec.ranks;
    c.repeat = spec.tail == ComplexSpec::Tail::repeat_left;
    const size_t m = spec.ranks.size();
    if (m < 2) throw SpecShapeMismatch("complex needs at least two modules");
    for (int r : spec.ranks)
        if (r <= 0) throw SpecShapeMismatch("module ranks must be positive");
    if (spec.ranks.back() != 1)
        throw SpecShapeMismatch("rightmost module must be the algebra itself (rank 1)");
    if (spec.differentials.size() != m - 1)
        throw SpecShapeMismatch("expected one differential per adjacent module pair");
    if (c.repeat && spec.ranks[0] != spec.ranks[1])
        throw SpecShapeMismatch("a repeating tail needs equal ranks at the two leftmost modules");
    for (size_t i = 0; i + 1 < m; ++i) {
        const auto& d = spec.differentials[i];
        if (static_cast<int>(d.size()) != spec.ranks[i])
            throw SpecShapeMismatch("differential " + std::to_string(i) + " row count mismatch");
        std::vector<std::vector<Poly>> mat;
        for (const auto& row : d) {
            if (static_cast<int>(row.size()) != spec.ranks[i + 1])
                throw SpecShapeMismatch("differential " + std::to_string(i) + " column count mismatch");
            std::vector<Poly> prow;
            for (const std::string& entry : row) {
                Poly p = parse_poly(entry, P.gens, P.field);
                if (!p.is_zero()) {
                    auto deg = homogeneous_degree(p);
                    if (!deg || *deg != 1)
                        throw SpecShapeMismatch("differential entries must be homogeneous of degree 1 (or 0)");
                }
                prow.push_back(std::move(p));
            }
            mat.push_back(std::move(prow));
        }
        c.diffs.push_back(std::move(mat));
    }
    return c;
}

/// Matrix product over the algebra, entries reduced to normal form.
inline std::vector<std::vector<Poly>> reduced_product(const std::vector<std::vector<Poly>>& A,
                                                      const std::vector<std::vector<Poly>>& B,
                                                      const GBasis& basis, const Field& F) {
    const size_t rows = A.size(), mid = B.size(), cols = B.empty() ? 0 : B[0].size();
    std::vector<std::vector<Poly>> out(rows, std::vector<Poly>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Poly acc;
            for (size_t k = 0; k < mid; ++k)
                acc = add(acc, multiply(A[r][k], B[k][c], F), F);
            out[r][c] = reduce(acc, basis.elems, F);
        }
    return out;
}

/// Rank of the block matrix of a differential at total degree n. The source
/// module has the given rank and generation degree; entry (k,c) acts by right
/// multiplication.
inline int block_rank(const GBasis& basis, const std::vector<std::vector<Poly>>& mat,
                      int src_gen_degree, int n, const Field& F) {
    const int sd = n - src_gen_degree;       // internal degree at the source
    if (sd < 0) return 0;
    if (mat.empty() || mat[0].empty()) return 0;
    const size_t rows_cnt = mat.size(), cols_cnt = mat[0].size();
    std::vector<Word> src = normal_words(basis, sd);
    std::vector<Word> dst = normal_words(basis, sd + 1);
    std::unordered_map<std::string, int> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i].letters, static_cast<int>(i));
    std::vector<SparseVec> cols;
    cols.reserve(rows_cnt * src.size());
    for (size_t k = 0; k < rows_cnt; ++k) {
        for (const Word& w : src) {
            SparseVec col;
            for (size_t c = 0; c < cols_cnt; ++c) {
                const Poly& entry = mat[k][c];
                if (entry.is_zero()) continue;
                Poly prod;
                for (const auto& [g, coeff] : entry.terms) add_term(prod.terms, w * g, coeff, F);
                Poly nf = reduce(prod, basis.elems, F);
                for (const auto& [u, coeff] : nf.terms) {
                    auto it = dst_index.find(u.letters);
                    if (it == dst_index.end()) throw Error("normal form left the normal-word basis");
                    col.emplace_back(static_cast<int>(c) * static_cast<int>(dst.size()) + it->second, coeff);
                }
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!col.empty()) cols.push_back(std::move(col));
        }
    }
    return rank(cols, F);
}

}  // namespace detail

/// Degree-wise exactness certificate for an explicit complex: checks that
/// consecutive compositions vanish identically (symbolically, which covers
/// all degrees) and that rank-nullity balances at every position for every
/// total degree n <= D.
inline ComplexReport verify_complex(const Presentation& P, const ComplexSpec& spec, int D) {
    detail::CheckedComplex c = detail::check_complex_shape(P, spec);
    GBasis basis = complete(P, D + 1);
    const Field& F = P.field;
    const int m = static_cast<int>(c.ranks.size());

    ComplexReport rep;
    rep.degree = D;
    rep.compositions_zero = true;

    auto record_product = [&](const std::vector<std::vector<Poly>>& prod, const std::string& label) {
        for (size_t r = 0; r < prod.size(); ++r)
            for (size_t col = 0; col < prod[r].size(); ++col)
                if (!prod[r][col].is_zero()) {
                    rep.compositions_zero = false;
                    rep.nonzero_compositions.push_back(
                        label + " entry (" + std::to_string(r) + "," + std::to_string(col) +
                        ") = " + poly_to_string(prod[r][col], P.gens, F));
                }
    };
    for (int i = 0; i + 2 < m; ++i)
        record_product(detail::reduced_product(c.diffs[static_cast<size_t>(i)],
                                               c.diffs[static_cast<size_t>(i) + 1], basis, F),
                       "d" + std::to_string(m - 1 - i) + " o d" + std::to_string(m - 2 - i));
    if (c.repeat)
        record_product(detail::reduced_product(c.diffs[0], c.diffs[0], basis, F), "repeated tail");

    // Expanded chain of (rank, generation degree, differential-to-the-right):
    // virtual copies of the leftmost module cover generation degrees up to D
    // when the tail repeats.
    struct Link {
        int rank;
        int gen_degree;
        const std::vector<std::vector<Poly>>* out;  // nullptr for the algebra slot
    };
    std::vector<Link> chain;
    if (c.repeat)
        for (int g = D; g >= m; --g) chain.push_back({c.ranks[0], g, &c.diffs[0]});
    for (int i = 0; i < m - 1; ++i)
        chain.push_back({c.ranks[static_cast<size_t>(i)], m - 1 - i, &c.diffs[static_cast<size_t>(i)]});
    chain.push_back({1, 0, nullptr});

    Series H = hilbert_series(basis, D + 1);
    // rank cache per (link index, degree)
    std::vector<std::unordered_map<int, int>> rank_cache(chain.size());
    auto rank_at = [&](size_t li, int n) -> int {
        if (li >= chain.size() || !chain[li].out) return 0;
        auto& cache = rank_cache[li];
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        int r = detail::block_rank(basis, *chain[li].out, chain[li].gen_degree, n, F);
        cache.emplace(n, r);
        return r;
    };

    for (size_t li = 0; li < chain.size(); ++li) {
        const Link& link = chain[li];
        const bool leftmost = (li == 0) && !c.repeat;
        for (int n = 0; n <= D; ++n) {
            if (n < link.gen_degree) continue;
            ComplexPositionReport pr;
            pr.position = link.gen_degree;
            pr.rank = link.rank;
            pr.degree = n;
            pr.dim = Int(link.rank) * H[n - link.gen_degree];
            pr.outgoing_rank = rank_at(li, n);
            pr.incoming_rank = (li == 0) ? (c.repeat ? 0 : 0) : rank_at(li - 1, n);
            if (li == 0 && c.repeat) {
                // incoming from the next virtual copy, same matrix one step left
                pr.incoming_rank = detail::block_rank(basis, *chain[0].out, link.gen_degree + 1, n, F);
            }
            if (!chain[li].out) {
                // algebra slot: image of the last differential must fill the
                // augmentation ideal
                Int target = (n >= 1) ? H[n] : Int(0);
                pr.exact = (Int(pr.incoming_rank) == target);
            } else if (leftmost) {
                // kernel must vanish
                pr.exact = (Int(pr.outgoing_rank) == pr.dim);
            } else {
                pr.exact = (Int(pr.incoming_rank) + Int(pr.outgoing_rank) == pr.dim);
            }
            if (!pr.exact) rep.exact = false;
            rep.positions.push_back(pr);
        }
    }
    if (!rep.compositions_zero) rep.exact = false;
    return rep;
}

}  // namespace qa3
