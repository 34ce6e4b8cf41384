#ifndef ECCALU_COSTMODEL_HPP
#define ECCALU_COSTMODEL_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "eccalu/blocks.hpp"
#include "eccalu/netlist.hpp"

namespace eccalu {

struct CostReport {
    std::string architecture;
    std::map<GateKind, int> by_kind;
    int total = 0;
    // Gates beyond an unprotected single-copy baseline of the operation.
    int redundant = 0;
    // Gates in the unprotected final stage: all voters (TMR) or the one
    // corrector (ECC path).
    int final_stage_gates = 0;
    // Final-stage units: voter count (one per output bit) vs one corrector.
    int final_stage_units = 0;
};

CostReport gate_counts(const Netlist& net);
nlohmann::json cost_report_to_json(const CostReport& report);

// (2r+1) * n_bits replicated bit slices.
int tmr_redundancy(int n_bits, int r);

// Minimal h with 2^h >= k_bits + h + 1; one more for SEC-DED.
int hamming_parity_count(int k_bits, bool extended);

// Berger check bits, ceil(log2(n_bits + 1)).
int bcp_bits(int n_bits);

// Head-to-head comparison for an operation at a given data width:
// ECC = distance-preserving block + corrector, TMR = (2r+1) replicas of the
// raw block + voters. Gate totals include each side's final stage.
struct ArchitectureComparison {
    CostReport ecc;
    CostReport tmr;
    int raw_gates = 0;  // unprotected single-copy baseline
};
ArchitectureComparison compare_architectures(BlockOp op, const CodeSpec& code, int r);

}  // namespace eccalu

#endif
