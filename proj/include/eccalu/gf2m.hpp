#ifndef ECCALU_GF2M_HPP
#define ECCALU_GF2M_HPP

#include <cstdint>
#include <vector>

#include "eccalu/errors.hpp"

namespace eccalu {

// Element of GF(2^m) in polynomial basis, bit i = coefficient of x^i.
using GfElement = std::uint16_t;

// Extension degree and reduction polynomial of a binary extension field.
// reduction_poly bit i = coefficient of x^i; bit m must be set.
struct FieldSpec {
    int m = 0;
    std::uint32_t reduction_poly = 0;
};

// Validated GF(2^m) arithmetic, 1 <= m <= 16. Construction checks that the
// reduction polynomial has degree m and is irreducible over GF(2) (exhaustive
// factor search, cheap at these sizes). All operations are pure.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int m() const { return spec_.m; }
    // Number of elements, 2^m.
    std::uint32_t size() const { return 1u << spec_.m; }
    // Multiplicative group order, 2^m - 1.
    std::uint32_t order() const { return size() - 1; }

    GfElement add(GfElement a, GfElement b) const { return a ^ b; }
    GfElement mul(GfElement a, GfElement b) const;  // shift-and-reduce
    GfElement inv(GfElement a) const;               // throws ZeroInverse on 0
    GfElement pow(GfElement a, long long e) const;  // e may be negative

    bool operator==(const Field& other) const {
        return spec_.m == other.spec_.m && spec_.reduction_poly == other.spec_.reduction_poly;
    }

private:
    GfElement pow_unsigned(GfElement a, std::uint64_t e) const;
    FieldSpec spec_;
};

GfElement gf_mul(GfElement a, GfElement b, const Field& field);
GfElement gf_inv(GfElement a, const Field& field);
GfElement gf_pow(GfElement a, long long e, const Field& field);

// Conventional primitive polynomials; keep test vectors reproducible.
Field gf8();    // x^3 + x + 1
Field gf16();   // x^4 + x + 1
Field gf256();  // x^8 + x^4 + x^3 + x^2 + 1

// Polynomials over GF(2) packed into an integer, bit i = coeff of x^i.
namespace gf2poly {
int degree(std::uint64_t p);  // -1 for the zero polynomial
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod(std::uint64_t a, std::uint64_t b);
bool irreducible(std::uint64_t p);
}  // namespace gf2poly

}  // namespace eccalu

#endif
