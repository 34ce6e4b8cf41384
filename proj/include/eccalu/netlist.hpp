#ifndef ECCALU_NETLIST_HPP
#define ECCALU_NETLIST_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eccalu/errors.hpp"

namespace eccalu {

enum class GateKind { AND, OR, NOT, NAND, NOR, XOR, XNOR, BUF, CONST0, CONST1 };

int gate_arity(GateKind kind);  // 0 for CONST, 1 for NOT/BUF, else 2
const char* gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// A wire is either a primary-input bit (flattened index across the input
// buses in declaration order) or a gate output.
struct WireRef {
    enum class Src : std::uint8_t { Input, Gate };
    Src src = Src::Input;
    std::uint32_t index = 0;

    static WireRef input(std::uint32_t flat_bit) { return {Src::Input, flat_bit}; }
    static WireRef gate(std::uint32_t id) { return {Src::Gate, id}; }
    bool operator==(const WireRef&) const = default;
};

enum class FaultKind { TransientFlip, StuckAt0, StuckAt1 };

// A transient flip or stuck-at on one gate's output wire, applied after the
// gate computes and before fanout.
struct FaultSpec {
    int gate_id = 0;
    FaultKind kind = FaultKind::TransientFlip;
    bool operator==(const FaultSpec&) const = default;
};

using Assignment = std::map<std::string, std::vector<std::uint8_t>>;

// Acyclic combinational gate graph with named input/output buses. Gates are
// at most 2-input; ids are dense and ascending, and a gate may only reference
// input bits or earlier gates, so construction order is evaluation order.
class Netlist {
public:
    struct Gate {
        GateKind kind;
        WireRef a, b;  // unused slots ignored per arity
    };
    struct Bus {
        std::string name;
        int width = 0;
        int offset = 0;  // flattened first-bit index (input buses)
    };

    // -- construction --
    int add_input_bus(const std::string& name, int width);
    int add_gate(GateKind kind, WireRef a = {}, WireRef b = {});
    void add_output_bus(const std::string& name, std::vector<WireRef> wires);
    WireRef input_bit(const std::string& bus, int bit) const;

    // -- shape --
    int gate_count() const { return static_cast<int>(gates_.size()); }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<Bus>& input_buses() const { return input_buses_; }
    const std::vector<Bus>& output_buses() const { return output_buses_; }
    const std::vector<std::vector<WireRef>>& output_wires() const { return output_wires_; }
    int input_bit_count() const { return input_bits_; }
    int output_bit_count() const;
    bool has_input_bus(const std::string& name) const;
    int input_bus_width(const std::string& name) const;

    // -- evaluation --
    Assignment evaluate(const Assignment& inputs) const;
    Assignment evaluate_with_faults(const Assignment& inputs,
                                    std::span<const FaultSpec> faults) const;

    // Allocation-free path for campaigns: caller provides flattened input
    // bits, a gate-value scratch of size gate_count() and the output buffer.
    void evaluate_flat(std::span<const std::uint8_t> input_bits,
                       std::span<const FaultSpec> faults, std::span<std::uint8_t> gate_scratch,
                       std::span<std::uint8_t> output_bits) const;

    // -- analysis --
    // Per gate: sorted list of primary-output bit positions in its transitive
    // fanout (flattened across output buses in declaration order).
    std::vector<std::vector<int>> output_cones() const;

    // -- text format --
    std::string serialize() const;
    static Netlist parse(const std::string& text);

    void validate_fault(const FaultSpec& fault) const;

private:
    void check_ref(const WireRef& ref, int next_gate_id) const;
    std::vector<std::uint8_t> flatten_inputs(const Assignment& inputs) const;

    std::vector<Gate> gates_;
    std::vector<Bus> input_buses_;
    std::vector<Bus> output_buses_;
    std::vector<std::vector<WireRef>> output_wires_;
    int input_bits_ = 0;
};

// Gate ids whose output cone holds two or more primary-output bits; empty
// means every single gate fault is confined to one output bit.
std::vector<int> check_cone_disjointness(const Netlist& net);

// Inline `sub` into `dst`, binding each of sub's input buses to existing dst
// wires. Returns sub's output wires per bus name, remapped into dst.
std::map<std::string, std::vector<WireRef>> inline_netlist(
    Netlist& dst, const Netlist& sub,
    const std::map<std::string, std::vector<WireRef>>& bindings);

// Sub-netlist computing one primary-output bit: same input buses, gates
// restricted to the bit's fan-in cone, single output bus "z" of width 1.
Netlist extract_cone(const Netlist& net, int output_bit);

}  // namespace eccalu

#endif
