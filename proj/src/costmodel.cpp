#include "eccalu/costmodel.hpp"

#include "eccalu/tmr.hpp"

namespace eccalu {

CostReport gate_counts(const Netlist& net) {
    CostReport report;
    for (const auto& g : net.gates()) {
        ++report.by_kind[g.kind];
        ++report.total;
    }
    return report;
}

nlohmann::json cost_report_to_json(const CostReport& report) {
    nlohmann::json by_kind = nlohmann::json::object();
    for (const auto& [kind, cnt] : report.by_kind) by_kind[gate_kind_name(kind)] = cnt;
    return {{"architecture", report.architecture},
            {"by_kind", by_kind},
            {"total", report.total},
            {"redundant", report.redundant},
            {"final_stage_gates", report.final_stage_gates},
            {"final_stage_units", report.final_stage_units}};
}

int tmr_redundancy(int n_bits, int r) {
    if (n_bits < 1 || r < 0) throw Error("tmr_redundancy needs n_bits >= 1 and r >= 0");
    return (2 * r + 1) * n_bits;
}

int hamming_parity_count(int k_bits, bool extended) {
    if (k_bits < 1) throw Error("hamming_parity_count needs k_bits >= 1");
    int h = 1;
    while ((1ll << h) < static_cast<long long>(k_bits) + h + 1) ++h;
    return extended ? h + 1 : h;
}

int bcp_bits(int n_bits) {
    if (n_bits < 1) throw Error("bcp_bits needs n_bits >= 1");
    int bits = 0;
    while ((1ll << bits) < static_cast<long long>(n_bits) + 1) ++bits;
    return bits;
}

ArchitectureComparison compare_architectures(BlockOp op, const CodeSpec& code, int r) {
    ArchitectureComparison cmp;
    const int k = code.k();

    Netlist ecc_block;
    switch (op) {
        case BlockOp::XOR: ecc_block = build_xor_block(code); break;
        case BlockOp::ADD: ecc_block = build_hamming_adder(code, k); break;
        case BlockOp::SUB: ecc_block = build_hamming_adder(code, k, true); break;
        default:
            ecc_block = code.kind() == CodeKind::Bch ? build_bch_bitwise_block(op, code)
                                                     : build_bitwise_block(op, code, false);
            break;
    }
    const Netlist corrector = build_corrector(code);
    const Netlist raw = build_raw_block(op, k);
    const Netlist tmr = build_tmr(raw, r);

    cmp.raw_gates = raw.gate_count();

    cmp.ecc = gate_counts(ecc_block);
    const CostReport corr = gate_counts(corrector);
    for (const auto& [kind, cnt] : corr.by_kind) cmp.ecc.by_kind[kind] += cnt;
    cmp.ecc.total += corr.total;
    cmp.ecc.architecture = "ecc";
    cmp.ecc.redundant = cmp.ecc.total - cmp.raw_gates;
    cmp.ecc.final_stage_gates = corr.total;
    cmp.ecc.final_stage_units = 1;

    cmp.tmr = gate_counts(tmr);
    cmp.tmr.architecture = "tmr";
    cmp.tmr.redundant = cmp.tmr.total - cmp.raw_gates;
    cmp.tmr.final_stage_units = raw.output_bit_count();
    cmp.tmr.final_stage_gates = cmp.tmr.final_stage_units * voter_gate_count(r);
    return cmp;
}

}  // namespace eccalu
