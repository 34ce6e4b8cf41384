#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eccalu/costmodel.hpp"
#include "eccalu/tmr.hpp"

using namespace eccalu;

TEST_CASE("gate counts") {
    const Netlist empty;
    const CostReport none = gate_counts(empty);
    CHECK(none.total == 0);
    CHECK(none.by_kind.empty());

    const CostReport xb = gate_counts(build_xor_block(CodeSpec::hamming(4)));
    CHECK(xb.total == 7);
    CHECK(xb.by_kind.at(GateKind::XOR) == 7);

    const Netlist base = build_raw_block(BlockOp::NAND, 4);
    const CostReport tmr = gate_counts(build_tmr(base, 1));
    CHECK(tmr.total >= 3 * base.gate_count() + 5 * 4);
}

TEST_CASE("tmr redundancy formula") {
    CHECK(tmr_redundancy(4, 1) == 12);
    CHECK(tmr_redundancy(32, 2) == 160);
    CHECK(tmr_redundancy(5, 0) == 5);
    CHECK_THROWS_AS(tmr_redundancy(0, 1), Error);
}

TEST_CASE("hamming parity counts") {
    CHECK(hamming_parity_count(4, false) == 3);
    CHECK(hamming_parity_count(4, true) == 4);
    CHECK(hamming_parity_count(32, false) == 6);
    CHECK(hamming_parity_count(32, true) == 7);
    CHECK(hamming_parity_count(1, false) == 2);  // 2^2 >= 1+2+1
    CHECK(hamming_parity_count(57, false) == 6);
    CHECK(hamming_parity_count(58, false) == 7);
}

TEST_CASE("bcp check bits") {
    CHECK(bcp_bits(32) == 6);
    CHECK(bcp_bits(1) == 1);
    CHECK(bcp_bits(7) == 3);
    CHECK(bcp_bits(8) == 4);
}

TEST_CASE("parity count is nondecreasing and grows at most 1 per doubling") {
    int prev = hamming_parity_count(1, false);
    for (int k = 2; k <= (1 << 15); ++k) {
        const int h = hamming_parity_count(k, false);
        CHECK(h >= prev);
        prev = h;
    }
    for (int k = 1; k <= (1 << 14); k *= 2) {
        CHECK(hamming_parity_count(2 * k, false) <= hamming_parity_count(k, false) + 1);
    }
}

TEST_CASE("bcp stays within one bit of the SEC parity count") {
    for (int n = 1; n <= (1 << 16); n = n < 64 ? n + 1 : n * 2 - 7) {
        CHECK(bcp_bits(n) <= hamming_parity_count(n, false) + 1);
    }
}

TEST_CASE("logarithmic-vs-linear crossover exists for the adder family") {
    // ECC side: parity bits + corrector gates. TMR side: (2r+1)*k replicated
    // bit slices priced at the raw adder's per-bit gate cost. Widths stop at
    // k=57, the largest the 64-bit codeword representation carries.
    std::vector<int> widths = {4, 8, 16, 24, 32, 48, 57};
    int crossover = -1;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        const int k = widths[i];
        const int ecc = hamming_parity_count(k, false) +
                        gate_counts(build_corrector(CodeSpec::hamming(k))).total;
        const double per_bit =
            static_cast<double>(gate_counts(build_raw_block(BlockOp::ADD, k)).total) / k;
        const double tmr = tmr_redundancy(k, 1) * per_bit;
        if (ecc < tmr) {
            bool holds_from_here = true;
            for (std::size_t j = i; j < widths.size(); ++j) {
                const int kk = widths[j];
                const int e = hamming_parity_count(kk, false) +
                              gate_counts(build_corrector(CodeSpec::hamming(kk))).total;
                const double t = tmr_redundancy(kk, 1) *
                                 static_cast<double>(
                                     gate_counts(build_raw_block(BlockOp::ADD, kk)).total) /
                                 kk;
                if (e >= t) holds_from_here = false;
            }
            if (holds_from_here) {
                crossover = k;
                break;
            }
        }
    }
    CHECK(crossover > 0);
}

TEST_CASE("architecture comparison: one corrector vs n voters") {
    const ArchitectureComparison cmp =
        compare_architectures(BlockOp::NAND, CodeSpec::hamming(4), 1);
    CHECK(cmp.ecc.final_stage_units == 1);
    CHECK(cmp.tmr.final_stage_units == 4);
    CHECK(cmp.tmr.final_stage_gates == 4 * voter_gate_count(1));
    CHECK(cmp.raw_gates == 4);
    CHECK(cmp.tmr.total == cmp.tmr.redundant + cmp.raw_gates);
    CHECK(cmp.ecc.total == cmp.ecc.redundant + cmp.raw_gates);
    int sum = 0;
    for (const auto& [kind, cnt] : cmp.ecc.by_kind) sum += cnt;
    CHECK(sum == cmp.ecc.total);
}
