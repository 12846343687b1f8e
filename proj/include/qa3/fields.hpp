#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qa3/errors.hpp"

namespace qa3 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime, gf4 };

/// Residue modulo the ambient prime. The modulus lives in the Field, not here.
struct FpElem {
    std::uint32_t r = 0;
    bool operator==(const FpElem&) const = default;
};

/// Element of the 4-element field F2[w]/(w^2+w+1), encoded 0,1,w->2,w+1->3.
struct Gf4Elem {
    std::uint8_t b = 0;
    bool operator==(const Gf4Elem&) const = default;
};

/// Exact field element. Compact: carries no field tag beyond the variant
/// alternative; all arithmetic goes through a Field.
struct Scalar {
    std::variant<Rational, FpElem, Gf4Elem> v;

    bool operator==(const Scalar&) const = default;
};

inline bool is_prime_u32(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// A field of scalars: the rationals, a prime field F_p (p < 2^31), or GF(4).
/// Field objects are cheap values; scalars are validated against the field
/// kind on every operation.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }

    static Field prime(std::uint32_t p) {
        if (p >= (1u << 31) || !is_prime_u32(p))
            throw InvalidParameter("field modulus must be a prime below 2^31, got " + std::to_string(p));
        return Field(FieldKind::prime, p);
    }

    static Field gf4() { return Field(FieldKind::gf4, 0); }

    FieldKind kind() const { return kind_; }
    std::uint32_t modulus() const { return p_; }

    bool operator==(const Field&) const = default;

    std::uint32_t characteristic() const {
        switch (kind_) {
            case FieldKind::rationals: return 0;
            case FieldKind::prime: return p_;
            case FieldKind::gf4: return 2;
        }
        return 0;
    }

    bool finite() const { return kind_ != FieldKind::rationals; }

    /// Number of elements for finite fields.
    std::uint64_t size() const {
        switch (kind_) {
            case FieldKind::prime: return p_;
            case FieldKind::gf4: return 4;
            default: throw InfiniteFieldUnsupported();
        }
    }

    void check(const Scalar& s) const {
        bool ok = false;
        switch (kind_) {
            case FieldKind::rationals: ok = std::holds_alternative<Rational>(s.v); break;
            case FieldKind::prime: ok = std::holds_alternative<FpElem>(s.v); break;
            case FieldKind::gf4: ok = std::holds_alternative<Gf4Elem>(s.v); break;
        }
        if (!ok) throw FieldMismatch();
    }

    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }

    Scalar from_int(long long n) const {
        switch (kind_) {
            case FieldKind::rationals: return Scalar{Rational(n)};
            case FieldKind::prime: {
                long long r = n % static_cast<long long>(p_);
                if (r < 0) r += p_;
                return Scalar{FpElem{static_cast<std::uint32_t>(r)}};
            }
            case FieldKind::gf4: {
                long long r = n % 2;
                if (r < 0) r += 2;
                return Scalar{Gf4Elem{static_cast<std::uint8_t>(r)}};
            }
        }
        return Scalar{};
    }

    Scalar from_integer(const Int& n) const {
        switch (kind_) {
            case FieldKind::rationals: return Scalar{Rational(n)};
            case FieldKind::prime: {
                Int r = n % p_;
                if (r < 0) r += p_;
                return Scalar{FpElem{static_cast<std::uint32_t>(r)}};
            }
            case FieldKind::gf4: {
                Int r = n % 2;
                if (r < 0) r += 2;
                return Scalar{Gf4Elem{static_cast<std::uint8_t>(r.convert_to<int>())}};
            }
        }
        return Scalar{};
    }

    bool is_zero(const Scalar& s) const {
        check(s);
        switch (kind_) {
            case FieldKind::rationals: return std::get<Rational>(s.v) == 0;
            case FieldKind::prime: return std::get<FpElem>(s.v).r == 0;
            case FieldKind::gf4: return std::get<Gf4Elem>(s.v).b == 0;
        }
        return false;
    }

    bool is_one(const Scalar& s) const { return eq(s, one()); }

    bool eq(const Scalar& a, const Scalar& b) const {
        check(a);
        check(b);
        return a == b;
    }

    Scalar add(const Scalar& a, const Scalar& b) const {
        check(a);
        check(b);
        switch (kind_) {
            case FieldKind::rationals:
                return Scalar{std::get<Rational>(a.v) + std::get<Rational>(b.v)};
            case FieldKind::prime: {
                std::uint64_t s = std::uint64_t(std::get<FpElem>(a.v).r) + std::get<FpElem>(b.v).r;
                if (s >= p_) s -= p_;
                return Scalar{FpElem{static_cast<std::uint32_t>(s)}};
            }
            case FieldKind::gf4:
                return Scalar{Gf4Elem{static_cast<std::uint8_t>(std::get<Gf4Elem>(a.v).b ^ std::get<Gf4Elem>(b.v).b)}};
        }
        return Scalar{};
    }

    Scalar neg(const Scalar& a) const {
        check(a);
        switch (kind_) {
            case FieldKind::rationals: return Scalar{-std::get<Rational>(a.v)};
            case FieldKind::prime: {
                std::uint32_t r = std::get<FpElem>(a.v).r;
                return Scalar{FpElem{r == 0 ? 0 : p_ - r}};
            }
            case FieldKind::gf4: return a;  // characteristic 2
        }
        return Scalar{};
    }

    Scalar sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

    Scalar mul(const Scalar& a, const Scalar& b) const {
        check(a);
        check(b);
        switch (kind_) {
            case FieldKind::rationals:
                return Scalar{std::get<Rational>(a.v) * std::get<Rational>(b.v)};
            case FieldKind::prime: {
                std::uint64_t m = std::uint64_t(std::get<FpElem>(a.v).r) * std::get<FpElem>(b.v).r % p_;
                return Scalar{FpElem{static_cast<std::uint32_t>(m)}};
            }
            case FieldKind::gf4: {
                static constexpr std::uint8_t tab[4][4] = {
                    {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
                return Scalar{Gf4Elem{tab[std::get<Gf4Elem>(a.v).b][std::get<Gf4Elem>(b.v).b]}};
            }
        }
        return Scalar{};
    }

    Scalar inv(const Scalar& a) const {
        check(a);
        if (is_zero(a)) throw DivisionByZero();
        switch (kind_) {
            case FieldKind::rationals: {
                const Rational& q = std::get<Rational>(a.v);
                return Scalar{Rational(1) / q};
            }
            case FieldKind::prime: {
                // extended Euclid
                std::int64_t t = 0, nt = 1;
                std::int64_t r = p_, nr = std::get<FpElem>(a.v).r;
                while (nr != 0) {
                    std::int64_t q = r / nr;
                    std::int64_t tmp = t - q * nt;
                    t = nt; nt = tmp;
                    tmp = r - q * nr;
                    r = nr; nr = tmp;
                }
                if (t < 0) t += p_;
                return Scalar{FpElem{static_cast<std::uint32_t>(t)}};
            }
            case FieldKind::gf4: {
                static constexpr std::uint8_t itab[4] = {0, 1, 3, 2};
                return Scalar{Gf4Elem{itab[std::get<Gf4Elem>(a.v).b]}};
            }
        }
        return Scalar{};
    }

    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// Deterministic enumeration code for finite fields: codes 0..size()-1.
    /// F_p: code = residue. GF4: 0,1,w,w+1.
    Scalar element_from_code(std::uint64_t code) const {
        switch (kind_) {
            case FieldKind::prime: return Scalar{FpElem{static_cast<std::uint32_t>(code % p_)}};
            case FieldKind::gf4: return Scalar{Gf4Elem{static_cast<std::uint8_t>(code % 4)}};
            default: throw InfiniteFieldUnsupported();
        }
    }

    std::uint64_t code_of(const Scalar& s) const {
        check(s);
        switch (kind_) {
            case FieldKind::prime: return std::get<FpElem>(s.v).r;
            case FieldKind::gf4: return std::get<Gf4Elem>(s.v).b;
            default: throw InfiniteFieldUnsupported();
        }
    }

    /// Text form of a scalar: "2/3", "-5" over Q; canonical residue over F_p;
    /// 0|1|w|w+1 over GF4.
    std::string format(const Scalar& s) const {
        check(s);
        switch (kind_) {
            case FieldKind::rationals: {
                const Rational& q = std::get<Rational>(s.v);
                std::string out = numerator(q).str();
                if (denominator(q) != 1) out += "/" + denominator(q).str();
                return out;
            }
            case FieldKind::prime: return std::to_string(std::get<FpElem>(s.v).r);
            case FieldKind::gf4: {
                static const char* names[4] = {"0", "1", "w", "w+1"};
                return names[std::get<Gf4Elem>(s.v).b];
            }
        }
        return {};
    }

    /// Text form of the field itself, as used in presentation files.
    std::string spec_string() const {
        switch (kind_) {
            case FieldKind::rationals: return "Q";
            case FieldKind::prime: return "F" + std::to_string(p_);
            case FieldKind::gf4: return "GF4";
        }
        return {};
    }

private:
    Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

/// True if the scalar prints with a leading minus sign (Q only; finite-field
/// elements are canonical residues and never negative).
inline bool formats_negative(const Field& F, const Scalar& s) {
    return F.kind() == FieldKind::rationals && std::get<Rational>(s.v) < 0;
}

}  // namespace qa3
