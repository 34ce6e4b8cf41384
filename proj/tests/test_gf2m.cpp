#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eccalu/gf2m.hpp"

using namespace eccalu;

namespace {

// Independent multiplication oracle: log/antilog tables built only by
// repeated multiplication by x (one shift + conditional reduce per step),
// never by the general shift-and-reduce product under test.
struct TableOracle {
    std::vector<int> log;
    std::vector<GfElement> exp;

    explicit TableOracle(const FieldSpec& spec) {
        const std::uint32_t size = 1u << spec.m;
        log.assign(size, -1);
        exp.assign(size - 1, 0);
        std::uint32_t value = 1;
        for (std::uint32_t i = 0; i < size - 1; ++i) {
            exp[i] = static_cast<GfElement>(value);
            log[value] = static_cast<int>(i);
            value <<= 1;
            if (value & size) value ^= spec.reduction_poly;
        }
    }

    GfElement mul(GfElement a, GfElement b) const {
        if (a == 0 || b == 0) return 0;
        const int order = static_cast<int>(exp.size());
        return exp[(log[a] + log[b]) % order];
    }
};

}  // namespace

TEST_CASE("gf8 frozen vectors") {
    const Field f = gf8();
    CHECK(f.mul(3, 5) == 4);  // (x+1)(x^2+1) = x^2 mod x^3+x+1
    CHECK(f.inv(2) == 5);
    CHECK(f.pow(2, 3) == 3);  // x^3 = x+1
    CHECK(f.inv(1) == 1);

    // cross-check the frozen products against the table oracle
    const TableOracle oracle(f.spec());
    CHECK(oracle.mul(3, 5) == 4);
    for (GfElement a = 0; a < 8; ++a) {
        for (GfElement b = 0; b < 8; ++b) CHECK(f.mul(a, b) == oracle.mul(a, b));
    }
}

TEST_CASE("zero and one behave") {
    const Field f = gf16();
    for (GfElement a = 0; a < 16; ++a) {
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.pow(a, 0) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), ZeroInverse);
    CHECK_THROWS_AS(f.pow(0, -1), ZeroInverse);
}

TEST_CASE("field axioms exhaustively for every m up to 4") {
    for (const Field& f :
         {Field({1, 0b11}), Field({2, 0b111}), gf8(), gf16()}) {
        for (GfElement a = 0; a < f.size(); ++a) {
            for (GfElement b = 0; b < f.size(); ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (GfElement c = 0; c < f.size(); ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("every nonzero element has an inverse and full-order power") {
    const Field f = gf16();
    for (GfElement a = 1; a < 16; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 15) == 1);  // order divides 2^m - 1
        CHECK(f.pow(a, -1) == f.inv(a));
    }
}

TEST_CASE("power sequence returns with period dividing the group order") {
    for (const Field& f : {gf8(), gf16(), gf256()}) {
        for (GfElement a = 1; a < f.size(); ++a) {
            CHECK(f.pow(a, f.order()) == 1);
            CHECK(f.pow(a, f.order() + 1) == a);
        }
    }
}

TEST_CASE("gf256 agrees with the table oracle on all pairs") {
    const Field f = gf256();
    const TableOracle oracle(f.spec());
    for (std::uint32_t a = 0; a < 256; ++a) {
        for (std::uint32_t b = 0; b < 256; ++b) {
            REQUIRE(f.mul(static_cast<GfElement>(a), static_cast<GfElement>(b)) ==
                    oracle.mul(static_cast<GfElement>(a), static_cast<GfElement>(b)));
        }
    }
}

TEST_CASE("reduction polynomial validation") {
    CHECK_THROWS_AS(Field({3, 0b1001}), Error);   // x^3+1 = (x+1)(x^2+x+1)
    CHECK_THROWS_AS(Field({4, 0b10101}), Error);  // x^4+x^2+1 = (x^2+x+1)^2
    CHECK_THROWS_AS(Field({3, 0b10011}), Error);  // degree mismatch
    CHECK_THROWS_AS(Field({0, 0b1}), Error);
    CHECK_THROWS_AS(Field({17, 0b1}), Error);
    CHECK_NOTHROW(Field({4, 0b11111}));  // x^4+x^3+x^2+x+1, irreducible (non-primitive)
}

TEST_CASE("gf2 polynomial helpers") {
    CHECK(gf2poly::degree(0) == -1);
    CHECK(gf2poly::degree(1) == 0);
    CHECK(gf2poly::degree(0b1011) == 3);
    CHECK(gf2poly::mul(0b11, 0b111) == 0b1001);  // (x+1)(x^2+x+1) = x^3+1
    CHECK(gf2poly::mod(0b1001, 0b11) == 0);
    CHECK(gf2poly::irreducible(0b1011));
    CHECK(!gf2poly::irreducible(0b1001));
}
