#include "eccalu/blocks.hpp"

#include <algorithm>

namespace eccalu {

const char* block_op_name(BlockOp op) {
    switch (op) {
        case BlockOp::XOR: return "xor";
        case BlockOp::AND: return "and";
        case BlockOp::OR: return "or";
        case BlockOp::NOT: return "not";
        case BlockOp::NAND: return "nand";
        case BlockOp::NOR: return "nor";
        case BlockOp::ADD: return "add";
        case BlockOp::SUB: return "sub";
    }
    return "?";
}

BlockOp block_op_from_name(const std::string& name) {
    for (BlockOp op : {BlockOp::XOR, BlockOp::AND, BlockOp::OR, BlockOp::NOT, BlockOp::NAND,
                       BlockOp::NOR, BlockOp::ADD, BlockOp::SUB}) {
        if (name == block_op_name(op)) return op;
    }
    throw UnsupportedOp("unknown block operation '" + name + "'");
}

std::uint64_t block_op_result(BlockOp op, std::uint64_t a, std::uint64_t b, int width) {
    const std::uint64_t mask = (width >= 64) ? ~0ull : ((1ull << width) - 1);
    switch (op) {
        case BlockOp::XOR: return (a ^ b) & mask;
        case BlockOp::AND: return (a & b) & mask;
        case BlockOp::OR: return (a | b) & mask;
        case BlockOp::NOT: return ~a & mask;
        case BlockOp::NAND: return ~(a & b) & mask;
        case BlockOp::NOR: return ~(a | b) & mask;
        case BlockOp::ADD: return (a + b) & mask;
        case BlockOp::SUB: return (a - b) & mask;
    }
    throw UnsupportedOp("bad block operation");
}

namespace {

GateKind bitwise_gate(BlockOp op) {
    switch (op) {
        case BlockOp::XOR: return GateKind::XOR;
        case BlockOp::AND: return GateKind::AND;
        case BlockOp::OR: return GateKind::OR;
        case BlockOp::NAND: return GateKind::NAND;
        case BlockOp::NOR: return GateKind::NOR;
        default: throw UnsupportedOp("not a 2-input bitwise operation");
    }
}

WireRef xor_fold(Netlist& net, const std::vector<WireRef>& wires) {
    if (wires.empty()) return WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::CONST0)));
    WireRef acc = wires[0];
    for (std::size_t i = 1; i < wires.size(); ++i) {
        acc = WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::XOR, acc, wires[i])));
    }
    return acc;
}

std::vector<WireRef> bus_wires(const Netlist& net, const std::string& bus, int width) {
    std::vector<WireRef> wires;
    wires.reserve(width);
    for (int i = 0; i < width; ++i) wires.push_back(net.input_bit(bus, i));
    return wires;
}

void require_hamming_family(const CodeSpec& code, const char* what) {
    if (code.kind() != CodeKind::Hamming && code.kind() != CodeKind::ExtendedHamming) {
        throw UnsupportedCode(std::string(what) + " requires a Hamming-family code, got '" +
                              code.name() + "'");
    }
}

bool all_ones_is_codeword(const CodeSpec& code) {
    const auto cw = encode(std::vector<std::uint16_t>(code.k(), 1), code);
    return std::all_of(cw.units.begin(), cw.units.end(), [](std::uint16_t u) { return u == 1; });
}

// One private full-width ripple adder; returns all sum wires. Every gate is
// fresh, including the carry-in constant and any y inverters, so replicas
// never share logic.
std::vector<WireRef> emit_replica_adder(Netlist& net, const std::vector<WireRef>& xs,
                                        const std::vector<WireRef>& ys, bool subtract) {
    const int width = static_cast<int>(xs.size());
    WireRef carry = WireRef::gate(static_cast<std::uint32_t>(
        net.add_gate(subtract ? GateKind::CONST1 : GateKind::CONST0)));
    std::vector<WireRef> sums;
    sums.reserve(width);
    for (int i = 0; i < width; ++i) {
        WireRef yb = ys[i];
        if (subtract) {
            yb = WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::NOT, yb)));
        }
        const WireRef axb =
            WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::XOR, xs[i], yb)));
        sums.push_back(
            WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::XOR, axb, carry))));
        if (i + 1 < width) {
            const WireRef t1 =
                WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::AND, xs[i], yb)));
            const WireRef t2 =
                WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::AND, carry, axb)));
            carry = WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::OR, t1, t2)));
        }
    }
    return sums;
}

// Data gates plus per-parity-bit private replicas over the parity-row
// support. Shared by the Hamming and BCH bitwise constructors.
Netlist build_replicated_bitwise(BlockOp op, const CodeSpec& code, bool include_input_correctors) {
    const int n = code.n();
    const int k = code.k();
    Netlist net;
    net.add_input_bus("x", n);
    net.add_input_bus("y", n);
    std::vector<WireRef> xw = bus_wires(net, "x", n);
    std::vector<WireRef> yw = bus_wires(net, "y", n);

    if (include_input_correctors) {
        const Netlist corrector = build_corrector(code);
        xw = inline_netlist(net, corrector, {{"x", xw}}).at("z");
        yw = inline_netlist(net, corrector, {{"x", yw}}).at("z");
    }

    std::vector<WireRef> z;
    if (op == BlockOp::NOT) {
        // Complement of a codeword must be a codeword for bitwise-XOR with
        // the all-ones word to preserve the code.
        if (!all_ones_is_codeword(code)) {
            throw UnsupportedCode("all-ones word is not a codeword of '" + code.name() +
                                  "'; NOT block unavailable");
        }
        for (int i = 0; i < n; ++i) {
            const WireRef one =
                WireRef::gate(static_cast<std::uint32_t>(net.add_gate(GateKind::CONST1)));
            z.push_back(WireRef::gate(
                static_cast<std::uint32_t>(net.add_gate(GateKind::XOR, xw[i], one))));
        }
    } else {
        const GateKind g = bitwise_gate(op);
        for (int i = 0; i < k; ++i) {
            z.push_back(
                WireRef::gate(static_cast<std::uint32_t>(net.add_gate(g, xw[i], yw[i]))));
        }
        for (const std::uint64_t row : code.parity_rows()) {
            std::vector<WireRef> replica;
            for (int i = 0; i < k; ++i) {
                if ((row >> i) & 1) {
                    replica.push_back(
                        WireRef::gate(static_cast<std::uint32_t>(net.add_gate(g, xw[i], yw[i]))));
                }
            }
            z.push_back(xor_fold(net, replica));
        }
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

}  // namespace

Netlist build_xor_block(const CodeSpec& code) {
    if (!code.is_binary()) throw UnsupportedCode("XOR block requires a binary linear code");
    const int n = code.n();
    Netlist net;
    net.add_input_bus("x", n);
    net.add_input_bus("y", n);
    std::vector<WireRef> z;
    for (int i = 0; i < n; ++i) {
        z.push_back(WireRef::gate(static_cast<std::uint32_t>(
            net.add_gate(GateKind::XOR, net.input_bit("x", i), net.input_bit("y", i)))));
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

Netlist build_bitwise_block(BlockOp op, const CodeSpec& code, bool include_input_correctors) {
    if (op != BlockOp::AND && op != BlockOp::OR && op != BlockOp::NAND && op != BlockOp::NOR &&
        op != BlockOp::NOT) {
        throw UnsupportedOp(std::string("bitwise block does not implement '") +
                            block_op_name(op) + "'");
    }
    require_hamming_family(code, "bitwise block");
    return build_replicated_bitwise(op, code, include_input_correctors);
}

Netlist build_bch_bitwise_block(BlockOp op, const CodeSpec& code) {
    if (op == BlockOp::ADD || op == BlockOp::SUB) {
        throw UnsupportedOp("BCH bitwise block does not implement add/sub");
    }
    if (code.kind() != CodeKind::Bch) {
        throw UnsupportedCode("BCH bitwise block requires a binary BCH code (RS is not "
                              "constructed at gate level)");
    }
    return build_replicated_bitwise(op, code, false);
}

Netlist build_hamming_adder(const CodeSpec& code, int width, bool subtract) {
    require_hamming_family(code, "adder block");
    if (code.k() != width) {
        throw WidthMismatch("adder width " + std::to_string(width) + " != code k " +
                            std::to_string(code.k()));
    }
    const int n = code.n();
    Netlist net;
    net.add_input_bus("x", n);
    net.add_input_bus("y", n);
    const auto xw = bus_wires(net, "x", n);
    const auto yw = bus_wires(net, "y", n);
    const std::vector<WireRef> xd(xw.begin(), xw.begin() + width);
    const std::vector<WireRef> yd(yw.begin(), yw.begin() + width);

    std::vector<WireRef> z;
    for (int i = 0; i < width; ++i) {
        const auto sums = emit_replica_adder(net, xd, yd, subtract);
        z.push_back(sums[i]);
    }
    for (const std::uint64_t row : code.parity_rows()) {
        const auto sums = emit_replica_adder(net, xd, yd, subtract);
        std::vector<WireRef> taps;
        for (int i = 0; i < width; ++i) {
            if ((row >> i) & 1) taps.push_back(sums[i]);
        }
        z.push_back(xor_fold(net, taps));
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

Netlist build_opcode_alu(const CodeSpec& code, const std::map<int, BlockOp>& op_table) {
    require_hamming_family(code, "op-code ALU");
    for (int v = 0; v < 4; ++v) {
        if (!op_table.count(v)) {
            throw IncompleteOpTable("op table is missing opcode " + std::to_string(v));
        }
    }
    const int n = code.n();

    std::map<int, Netlist> sub_blocks;
    for (const auto& [v, op] : op_table) {
        switch (op) {
            case BlockOp::XOR: sub_blocks.emplace(v, build_xor_block(code)); break;
            case BlockOp::ADD: sub_blocks.emplace(v, build_hamming_adder(code, code.k())); break;
            case BlockOp::SUB:
                sub_blocks.emplace(v, build_hamming_adder(code, code.k(), true));
                break;
            default: sub_blocks.emplace(v, build_bitwise_block(op, code, false)); break;
        }
    }

    Netlist net;
    net.add_input_bus("x", n);
    net.add_input_bus("y", n);
    net.add_input_bus("c", 2);
    const auto xw = bus_wires(net, "x", n);
    const auto yw = bus_wires(net, "y", n);
    const WireRef c0 = net.input_bit("c", 0);
    const WireRef c1 = net.input_bit("c", 1);

    const auto gate = [&](GateKind kind, WireRef a, WireRef b = {}) {
        return WireRef::gate(static_cast<std::uint32_t>(net.add_gate(kind, a, b)));
    };

    std::vector<WireRef> z;
    for (int p = 0; p < n; ++p) {
        // Per-bit replicas of the four operand cones and of the decode/select
        // logic: the whole slice reaches only z[p].
        std::vector<WireRef> selected;
        const WireRef n0 = gate(GateKind::NOT, c0);
        const WireRef n1 = gate(GateKind::NOT, c1);
        for (int v = 0; v < 4; ++v) {
            const Netlist cone = extract_cone(sub_blocks.at(v), p);
            std::map<std::string, std::vector<WireRef>> bindings{{"x", xw}, {"y", yw}};
            const WireRef bit = inline_netlist(net, cone, bindings).at("z")[0];
            const WireRef sel =
                gate(GateKind::AND, (v & 2) ? c1 : n1, (v & 1) ? c0 : n0);
            selected.push_back(gate(GateKind::AND, sel, bit));
        }
        WireRef acc = selected[0];
        for (std::size_t i = 1; i < selected.size(); ++i) {
            acc = gate(GateKind::OR, acc, selected[i]);
        }
        z.push_back(acc);
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

Netlist build_corrector(const CodeSpec& code) {
    require_hamming_family(code, "corrector");
    const int n = code.n();
    const int r = n - code.k();
    Netlist net;
    net.add_input_bus("x", n);
    const auto xw = bus_wires(net, "x", n);

    const auto gate = [&](GateKind kind, WireRef a, WireRef b = {}) {
        return WireRef::gate(static_cast<std::uint32_t>(net.add_gate(kind, a, b)));
    };

    std::vector<WireRef> syn, syn_not;
    for (int j = 0; j < r; ++j) {
        std::vector<WireRef> taps;
        const std::uint64_t support = code.check_supports()[j];
        for (int u = 0; u < n; ++u) {
            if ((support >> u) & 1) taps.push_back(xw[u]);
        }
        syn.push_back(xor_fold(net, taps));
        syn_not.push_back(gate(GateKind::NOT, syn.back()));
    }

    std::vector<WireRef> z;
    for (int u = 0; u < n; ++u) {
        const std::uint32_t column = code.check_column(u);
        WireRef match = (column & 1) ? syn[0] : syn_not[0];
        for (int j = 1; j < r; ++j) {
            match = gate(GateKind::AND, match, ((column >> j) & 1) ? syn[j] : syn_not[j]);
        }
        z.push_back(gate(GateKind::XOR, xw[u], match));
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

Netlist build_raw_block(BlockOp op, int width) {
    Netlist net;
    net.add_input_bus("x", width);
    net.add_input_bus("y", width);
    const auto xw = bus_wires(net, "x", width);
    const auto yw = bus_wires(net, "y", width);
    std::vector<WireRef> z;
    if (op == BlockOp::ADD || op == BlockOp::SUB) {
        // One shared ripple adder: the carry chain deliberately fans out to
        // several sum bits.
        z = emit_replica_adder(net, xw, yw, op == BlockOp::SUB);
    } else if (op == BlockOp::NOT) {
        for (int i = 0; i < width; ++i) {
            z.push_back(WireRef::gate(
                static_cast<std::uint32_t>(net.add_gate(GateKind::NOT, xw[i]))));
        }
    } else {
        const GateKind g = bitwise_gate(op);
        for (int i = 0; i < width; ++i) {
            z.push_back(
                WireRef::gate(static_cast<std::uint32_t>(net.add_gate(g, xw[i], yw[i]))));
        }
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

Netlist build_raw_opcode_alu(int width, const std::map<int, BlockOp>& op_table) {
    for (int v = 0; v < 4; ++v) {
        if (!op_table.count(v)) {
            throw IncompleteOpTable("op table is missing opcode " + std::to_string(v));
        }
    }
    Netlist net;
    net.add_input_bus("x", width);
    net.add_input_bus("y", width);
    net.add_input_bus("c", 2);
    const auto xw = bus_wires(net, "x", width);
    const auto yw = bus_wires(net, "y", width);
    const auto gate = [&](GateKind kind, WireRef a, WireRef b = {}) {
        return WireRef::gate(static_cast<std::uint32_t>(net.add_gate(kind, a, b)));
    };

    std::map<int, std::vector<WireRef>> op_bits;
    for (const auto& [v, op] : op_table) {
        const Netlist raw = build_raw_block(op, width);
        op_bits[v] = inline_netlist(net, raw, {{"x", xw}, {"y", yw}}).at("z");
    }
    const WireRef c0 = net.input_bit("c", 0);
    const WireRef c1 = net.input_bit("c", 1);
    const WireRef n0 = gate(GateKind::NOT, c0);
    const WireRef n1 = gate(GateKind::NOT, c1);
    std::vector<WireRef> sel;
    for (int v = 0; v < 4; ++v) {
        sel.push_back(gate(GateKind::AND, (v & 2) ? c1 : n1, (v & 1) ? c0 : n0));
    }
    std::vector<WireRef> z;
    for (int i = 0; i < width; ++i) {
        WireRef acc;
        for (int v = 0; v < 4; ++v) {
            const WireRef term = gate(GateKind::AND, sel[v], op_bits[v][i]);
            acc = (v == 0) ? term : gate(GateKind::OR, acc, term);
        }
        z.push_back(acc);
    }
    net.add_output_bus("z", std::move(z));
    return net;
}

std::map<int, BlockOp> default_op_table() {
    return {{0, BlockOp::XOR}, {1, BlockOp::NAND}, {2, BlockOp::ADD}, {3, BlockOp::NOT}};
}

}  // namespace eccalu
