#pragma once

#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"

namespace qa3 {

/// Truncated Hilbert series: nonnegative integer dimensions for degrees
/// 0..truncation().
struct Series {
    std::vector<Int> c;

    int truncation() const { return static_cast<int>(c.size()) - 1; }
    const Int& operator[](int n) const { return c[static_cast<size_t>(n)]; }
    bool operator==(const Series&) const = default;
};

/// Truncated integer series with possibly negative coefficients.
struct SignedSeries {
    std::vector<Int> c;

    int truncation() const { return static_cast<int>(c.size()) - 1; }
    const Int& operator[](int n) const { return c[static_cast<size_t>(n)]; }
    bool operator==(const SignedSeries&) const = default;
};

/// Rational closed form numerator/denominator, integer coefficients,
/// denominator constant term normalized to 1.
struct RationalForm {
    std::vector<Int> num;
    std::vector<Int> den;

    RationalForm(std::vector<Int> n, std::vector<Int> d) : num(std::move(n)), den(std::move(d)) {
        while (!num.empty() && num.back() == 0) num.pop_back();
        while (!den.empty() && den.back() == 0) den.pop_back();
        if (den.empty() || den[0] == 0) return;  // expand() reports the error
        if (den[0] == -1) {
            for (Int& x : num) x = -x;
            for (Int& x : den) x = -x;
        }
        if (den[0] != 1)
            throw InvalidParameter("rational form denominator must have constant term +-1");
    }
};

/// First D+1 Taylor coefficients of num/den, exact integer arithmetic.
inline SignedSeries expand(const RationalForm& form, int D) {
    if (form.den.empty() || form.den[0] == 0) throw ZeroConstantDenominator();
    SignedSeries g;
    g.c.assign(static_cast<size_t>(D) + 1, Int(0));
    for (int n = 0; n <= D; ++n) {
        Int acc = static_cast<size_t>(n) < form.num.size() ? form.num[static_cast<size_t>(n)] : Int(0);
        for (int k = 1; k <= n && static_cast<size_t>(k) < form.den.size(); ++k)
            acc -= form.den[static_cast<size_t>(k)] * g.c[static_cast<size_t>(n - k)];
        g.c[static_cast<size_t>(n)] = acc;  // den[0] == 1
    }
    return g;
}

inline SignedSeries at_minus_t(const Series& H) {
    SignedSeries out;
    out.c.reserve(H.c.size());
    for (size_t k = 0; k < H.c.size(); ++k) out.c.push_back(k % 2 ? -H.c[k] : H.c[k]);
    return out;
}

inline SignedSeries to_signed(const Series& H) {
    return SignedSeries{H.c};
}

inline SignedSeries mul(const SignedSeries& a, const SignedSeries& b, int D) {
    SignedSeries out;
    out.c.assign(static_cast<size_t>(D) + 1, Int(0));
    for (int i = 0; i <= D && i < static_cast<int>(a.c.size()); ++i)
        for (int j = 0; i + j <= D && j < static_cast<int>(b.c.size()); ++j)
            out.c[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    return out;
}

/// The unique signed series G with H(-t) * G(t) = 1 + O(t^{D+1}), computed by
/// the triangular recurrence g_n = -sum_{k=1..n} (-1)^k h_k g_{n-k}.
inline SignedSeries invert_at_minus_t(const Series& H, int D) {
    if (H.c.empty() || H.c[0] != 1)
        throw Error("series inversion requires constant term 1");
    SignedSeries g;
    g.c.assign(static_cast<size_t>(D) + 1, Int(0));
    g.c[0] = 1;
    for (int n = 1; n <= D; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n && k < static_cast<int>(H.c.size()); ++k) {
            Int hk = k % 2 ? -H.c[static_cast<size_t>(k)] : H.c[static_cast<size_t>(k)];
            acc -= hk * g.c[static_cast<size_t>(n - k)];
        }
        g.c[static_cast<size_t>(n)] = acc;
    }
    return g;
}

inline std::string poly_text(const std::vector<Int>& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        Int c = p[k];
        if (first) {
            if (c < 0) { out += "-"; c = -c; }
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
            if (c < 0) c = -c;
        }
        if (k == 0) {
            out += c.str();
        } else {
            if (c != 1) out += c.str() + "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return first ? "0" : out;
}

inline std::string form_text(const RationalForm& f) {
    if (f.den.size() <= 1) return poly_text(f.num);
    return "(" + poly_text(f.num) + ")/(" + poly_text(f.den) + ")";
}

}  // namespace qa3
