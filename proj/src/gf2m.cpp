#include "eccalu/gf2m.hpp"

namespace eccalu {

namespace gf2poly {

int degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    for (int i = 0; b; ++i, b >>= 1) {
        if (b & 1) acc ^= a << i;
    }
    return acc;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

bool irreducible(std::uint64_t p) {
    const int d = degree(p);
    if (d <= 0) return false;
    // A reducible polynomial of degree d has a factor of degree <= d/2.
    for (int fd = 1; fd <= d / 2; ++fd) {
        for (std::uint64_t f = 1ull << fd; f < (2ull << fd); ++f) {
            if (mod(p, f) == 0) return false;
        }
    }
    return true;
}

}  // namespace gf2poly

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.m < 1 || spec_.m > 16) {
        throw Error("field degree m must be in [1, 16], got " + std::to_string(spec_.m));
    }
    if (gf2poly::degree(spec_.reduction_poly) != spec_.m) {
        throw Error("reduction polynomial degree does not equal m");
    }
    if (!gf2poly::irreducible(spec_.reduction_poly)) {
        throw Error("reduction polynomial is reducible over GF(2)");
    }
}

GfElement Field::mul(GfElement a, GfElement b) const {
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    for (std::uint32_t bb = b; bb; bb >>= 1) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
        if (aa & (1u << spec_.m)) aa ^= spec_.reduction_poly;
    }
    return static_cast<GfElement>(acc);
}

GfElement Field::pow_unsigned(GfElement a, std::uint64_t e) const {
    GfElement result = 1;
    GfElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GfElement Field::inv(GfElement a) const {
    if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
    // a^(2^m - 2) = a^-1 in the multiplicative group.
    return pow_unsigned(a, order() - 1);
}

GfElement Field::pow(GfElement a, long long e) const {
    if (e < 0) {
        if (a == 0) throw ZeroInverse("0 raised to a negative power");
        return pow_unsigned(inv(a), static_cast<std::uint64_t>(-e));
    }
    return pow_unsigned(a, static_cast<std::uint64_t>(e));
}

GfElement gf_mul(GfElement a, GfElement b, const Field& field) { return field.mul(a, b); }
GfElement gf_inv(GfElement a, const Field& field) { return field.inv(a); }
GfElement gf_pow(GfElement a, long long e, const Field& field) { return field.pow(a, e); }

Field gf8() { return Field({3, 0b1011}); }
Field gf16() { return Field({4, 0b10011}); }
Field gf256() { return Field({8, 0b100011101}); }

}  // namespace eccalu
