#ifndef ECCALU_CODEC_HPP
#define ECCALU_CODEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eccalu/gf2m.hpp"

namespace eccalu {

enum class CodeKind { Hamming, ExtendedHamming, Bch, Rs };

// Systematic linear block code: codeword = [data | parity].
// Units are bits for Hamming/BCH and GF(2^m) symbols for RS.
//
// Binary codes carry a parity matrix P, one row per parity bit, where row bit
// i selects data bit i; parity_j = XOR of the selected data bits. Decode
// tables and syndrome powers are precomputed at construction; instances are
// immutable afterwards and freely shareable across threads.
class CodeSpec {
public:
    CodeKind kind() const { return kind_; }
    int n() const { return n_; }
    int k() const { return k_; }
    // Guaranteed correctable errors, the maximal correctable distance.
    int correctable_distance() const { return t_; }
    bool is_binary() const { return kind_ != CodeKind::Rs; }
    const Field& field() const;  // BCH/RS only

    // Binary codes: (n-k) parity rows as data-bit masks.
    const std::vector<std::uint64_t>& parity_rows() const { return parity_rows_; }
    // Binary codes: syndrome bit j = XOR of word bits in check_supports()[j],
    // a mask over all n unit positions. For ExtendedHamming the last support
    // covers every position (overall parity).
    const std::vector<std::uint64_t>& check_supports() const { return check_supports_; }
    // Parity-check column of unit position u, as an (n-k)-bit mask.
    std::uint32_t check_column(int u) const;
    // Hamming family: unit position flipped for a given syndrome, -1 if the
    // syndrome maps to no single-bit pattern.
    std::int32_t syndrome_position(std::uint32_t s) const { return syndrome_position_[s]; }

    // BCH/RS decode tables: codeword polynomial power of unit u, and
    // alpha^((j+1) * power(u)) for syndrome index j.
    int unit_power(int u) const { return unit_power_[u]; }
    GfElement syndrome_power(int j, int u) const { return syndrome_powers_[j][u]; }

    // BCH: GF(2) coefficient mask, bit i = coeff of x^i. RS: coefficient
    // vector indexed by degree.
    std::uint64_t generator_poly_bits() const { return gen_poly_bits_; }
    const std::vector<GfElement>& generator_poly() const { return gen_poly_; }

    std::string name() const { return name_; }

    static CodeSpec hamming(int k);           // shortened when k+h < 2^h - 1
    static CodeSpec extended_hamming(int k);  // SEC-DED
    static CodeSpec bch(const Field& field, int t);
    static CodeSpec rs(const Field& field, int t);

private:
    CodeSpec() = default;
    void finish_binary();
    void init_spectral();

    CodeKind kind_ = CodeKind::Hamming;
    int n_ = 0, k_ = 0, t_ = 0;
    std::string name_;
    std::optional<Field> field_;
    std::vector<std::uint64_t> parity_rows_;
    std::vector<std::uint64_t> check_supports_;
    std::vector<std::uint32_t> columns_;
    std::uint64_t gen_poly_bits_ = 0;
    std::vector<GfElement> gen_poly_;
    std::vector<std::int32_t> syndrome_position_;
    std::vector<std::vector<GfElement>> syndrome_powers_;
    std::vector<int> unit_power_;
};

struct Codeword {
    const CodeSpec* spec = nullptr;
    std::vector<std::uint16_t> units;  // length n, data first
};

struct Syndrome {
    // n-k bits (binary codes) or 2t GF elements (RS).
    std::vector<std::uint16_t> values;
    bool is_zero() const {
        for (auto v : values)
            if (v) return false;
        return true;
    }
};

struct Correction {
    std::vector<std::uint16_t> data;  // length k
    std::vector<int> errors_found;    // corrected unit positions, ascending
};

Codeword encode(const std::vector<std::uint16_t>& data, const CodeSpec& spec);
Syndrome syndrome(const std::vector<std::uint16_t>& word, const CodeSpec& spec);
// nullopt = Uncorrectable.
std::optional<Correction> correct(const std::vector<std::uint16_t>& word, const CodeSpec& spec);
// Brute force for binary codes (2^k <= 2^20), MDS formula for RS.
int min_distance(const CodeSpec& spec);

// Bit-vector helpers for binary codes: bit i of the value is unit i.
std::vector<std::uint16_t> value_to_units(std::uint64_t value, int width);
std::uint64_t units_to_value(const std::vector<std::uint16_t>& units);

// Shipped presets by CLI name (hamming7_4, exthamming8_4, hamming38_32,
// exthamming39_32, bch15_7, rs7_3). Throws UnsupportedCode for other names.
CodeSpec code_by_name(const std::string& name);
std::vector<std::string> code_names();

}  // namespace eccalu

#endif
