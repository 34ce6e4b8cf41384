#include "eccalu/netlist.hpp"

#include <algorithm>
#include <sstream>

namespace eccalu {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CONST0:
        case GateKind::CONST1:
            return 0;
        case GateKind::NOT:
        case GateKind::BUF:
            return 1;
        default:
            return 2;
    }
}

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::AND: return "AND";
        case GateKind::OR: return "OR";
        case GateKind::NOT: return "NOT";
        case GateKind::NAND: return "NAND";
        case GateKind::NOR: return "NOR";
        case GateKind::XOR: return "XOR";
        case GateKind::XNOR: return "XNOR";
        case GateKind::BUF: return "BUF";
        case GateKind::CONST0: return "CONST0";
        case GateKind::CONST1: return "CONST1";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    static const std::map<std::string, GateKind> table = {
        {"AND", GateKind::AND},   {"OR", GateKind::OR},        {"NOT", GateKind::NOT},
        {"NAND", GateKind::NAND}, {"NOR", GateKind::NOR},      {"XOR", GateKind::XOR},
        {"XNOR", GateKind::XNOR}, {"BUF", GateKind::BUF},      {"CONST0", GateKind::CONST0},
        {"CONST1", GateKind::CONST1}};
    auto it = table.find(name);
    if (it == table.end()) throw ParseError("unknown gate kind '" + name + "'");
    return it->second;
}

namespace {

inline std::uint8_t apply_gate(GateKind kind, std::uint8_t a, std::uint8_t b) {
    switch (kind) {
        case GateKind::AND: return a & b;
        case GateKind::OR: return a | b;
        case GateKind::NOT: return a ^ 1;
        case GateKind::NAND: return (a & b) ^ 1;
        case GateKind::NOR: return (a | b) ^ 1;
        case GateKind::XOR: return a ^ b;
        case GateKind::XNOR: return a ^ b ^ 1;
        case GateKind::BUF: return a;
        case GateKind::CONST0: return 0;
        case GateKind::CONST1: return 1;
    }
    return 0;
}

}  // namespace

void Netlist::check_ref(const WireRef& ref, int next_gate_id) const {
    if (ref.src == WireRef::Src::Input) {
        if (static_cast<int>(ref.index) >= input_bits_) {
            throw ParseError("input bit reference out of range");
        }
    } else {
        if (static_cast<int>(ref.index) >= next_gate_id) {
            throw ParseError("gate reference g" + std::to_string(ref.index) +
                             " is a forward reference");
        }
    }
}

int Netlist::add_input_bus(const std::string& name, int width) {
    if (width < 1) throw WidthMismatch("input bus width must be >= 1");
    if (has_input_bus(name)) throw ParseError("duplicate input bus '" + name + "'");
    input_buses_.push_back({name, width, input_bits_});
    input_bits_ += width;
    return static_cast<int>(input_buses_.size()) - 1;
}

int Netlist::add_gate(GateKind kind, WireRef a, WireRef b) {
    const int id = gate_count();
    const int arity = gate_arity(kind);
    if (arity >= 1) check_ref(a, id);
    if (arity >= 2) check_ref(b, id);
    gates_.push_back({kind, a, b});
    return id;
}

void Netlist::add_output_bus(const std::string& name, std::vector<WireRef> wires) {
    if (wires.empty()) throw WidthMismatch("output bus must have at least one wire");
    for (auto& b : output_buses_) {
        if (b.name == name) throw ParseError("duplicate output bus '" + name + "'");
    }
    for (const auto& w : wires) check_ref(w, gate_count());
    output_buses_.push_back({name, static_cast<int>(wires.size()), 0});
    output_wires_.push_back(std::move(wires));
}

WireRef Netlist::input_bit(const std::string& bus, int bit) const {
    for (const auto& b : input_buses_) {
        if (b.name == bus) {
            if (bit < 0 || bit >= b.width) throw WidthMismatch("input bit out of range");
            return WireRef::input(static_cast<std::uint32_t>(b.offset + bit));
        }
    }
    throw MissingInput("no input bus '" + bus + "'");
}

bool Netlist::has_input_bus(const std::string& name) const {
    for (const auto& b : input_buses_) {
        if (b.name == name) return true;
    }
    return false;
}

int Netlist::input_bus_width(const std::string& name) const {
    for (const auto& b : input_buses_) {
        if (b.name == name) return b.width;
    }
    throw MissingInput("no input bus '" + name + "'");
}

int Netlist::output_bit_count() const {
    int total = 0;
    for (const auto& b : output_buses_) total += b.width;
    return total;
}

void Netlist::validate_fault(const FaultSpec& fault) const {
    if (fault.gate_id < 0 || fault.gate_id >= gate_count()) {
        throw UnknownGate("fault target g" + std::to_string(fault.gate_id) + " does not exist");
    }
}

void Netlist::evaluate_flat(std::span<const std::uint8_t> input_bits,
                            std::span<const FaultSpec> faults,
                            std::span<std::uint8_t> gate_scratch,
                            std::span<std::uint8_t> output_bits) const {
    const auto wire_value = [&](const WireRef& r) -> std::uint8_t {
        return r.src == WireRef::Src::Input ? input_bits[r.index] : gate_scratch[r.index];
    };
    for (int id = 0; id < gate_count(); ++id) {
        const Gate& g = gates_[id];
        std::uint8_t v = apply_gate(g.kind, gate_arity(g.kind) >= 1 ? wire_value(g.a) : 0,
                                    gate_arity(g.kind) >= 2 ? wire_value(g.b) : 0);
        for (const auto& f : faults) {
            if (f.gate_id != id) continue;
            switch (f.kind) {
                case FaultKind::TransientFlip: v ^= 1; break;
                case FaultKind::StuckAt0: v = 0; break;
                case FaultKind::StuckAt1: v = 1; break;
            }
        }
        gate_scratch[id] = v;
    }
    int pos = 0;
    for (std::size_t b = 0; b < output_wires_.size(); ++b) {
        for (const auto& w : output_wires_[b]) output_bits[pos++] = wire_value(w);
    }
}

std::vector<std::uint8_t> Netlist::flatten_inputs(const Assignment& inputs) const {
    for (const auto& [name, bits] : inputs) {
        if (!has_input_bus(name)) throw MissingInput("'" + name + "' is not an input bus");
    }
    std::vector<std::uint8_t> flat(input_bits_, 0);
    for (const auto& bus : input_buses_) {
        auto it = inputs.find(bus.name);
        if (it == inputs.end()) throw MissingInput("missing input bus '" + bus.name + "'");
        if (static_cast<int>(it->second.size()) != bus.width) {
            throw WidthMismatch("input bus '" + bus.name + "' has width " +
                                std::to_string(bus.width) + ", got " +
                                std::to_string(it->second.size()));
        }
        std::copy(it->second.begin(), it->second.end(), flat.begin() + bus.offset);
    }
    return flat;
}

Assignment Netlist::evaluate(const Assignment& inputs) const {
    return evaluate_with_faults(inputs, {});
}

Assignment Netlist::evaluate_with_faults(const Assignment& inputs,
                                         std::span<const FaultSpec> faults) const {
    for (const auto& f : faults) validate_fault(f);
    const auto flat = flatten_inputs(inputs);
    std::vector<std::uint8_t> scratch(gate_count());
    std::vector<std::uint8_t> out(output_bit_count());
    evaluate_flat(flat, faults, scratch, out);
    Assignment result;
    int pos = 0;
    for (const auto& bus : output_buses_) {
        result[bus.name] = std::vector<std::uint8_t>(out.begin() + pos, out.begin() + pos + bus.width);
        pos += bus.width;
    }
    return result;
}

std::vector<std::vector<int>> Netlist::output_cones() const {
    std::vector<std::vector<int>> cones(gate_count());
    int bit = 0;
    std::vector<std::uint8_t> seen(gate_count());
    for (std::size_t b = 0; b < output_wires_.size(); ++b) {
        for (const auto& w : output_wires_[b]) {
            if (w.src == WireRef::Src::Gate) {
                // DFS over the fan-in cone of this output bit.
                std::fill(seen.begin(), seen.end(), 0);
                std::vector<std::uint32_t> stack{w.index};
                while (!stack.empty()) {
                    const std::uint32_t id = stack.back();
                    stack.pop_back();
                    if (seen[id]) continue;
                    seen[id] = 1;
                    cones[id].push_back(bit);
                    const Gate& g = gates_[id];
                    const int arity = gate_arity(g.kind);
                    if (arity >= 1 && g.a.src == WireRef::Src::Gate) stack.push_back(g.a.index);
                    if (arity >= 2 && g.b.src == WireRef::Src::Gate) stack.push_back(g.b.index);
                }
            }
            ++bit;
        }
    }
    return cones;
}

std::vector<int> check_cone_disjointness(const Netlist& net) {
    std::vector<int> violations;
    const auto cones = net.output_cones();
    for (int id = 0; id < net.gate_count(); ++id) {
        if (cones[id].size() >= 2) violations.push_back(id);
    }
    return violations;
}

namespace {

std::string wire_text(const Netlist& net, const WireRef& w) {
    if (w.src == WireRef::Src::Gate) return "g" + std::to_string(w.index);
    for (const auto& bus : net.input_buses()) {
        if (static_cast<int>(w.index) >= bus.offset &&
            static_cast<int>(w.index) < bus.offset + bus.width) {
            return bus.name + "[" + std::to_string(w.index - bus.offset) + "]";
        }
    }
    throw Error("dangling wire reference");
}

}  // namespace

std::string Netlist::serialize() const {
    std::ostringstream out;
    for (const auto& bus : input_buses_) {
        out << "input " << bus.name << " " << bus.width << "\n";
    }
    for (int id = 0; id < gate_count(); ++id) {
        const Gate& g = gates_[id];
        out << "gate " << id << " " << gate_kind_name(g.kind);
        const int arity = gate_arity(g.kind);
        if (arity >= 1) out << " " << wire_text(*this, g.a);
        if (arity >= 2) out << " " << wire_text(*this, g.b);
        out << "\n";
    }
    for (std::size_t b = 0; b < output_buses_.size(); ++b) {
        out << "output " << output_buses_[b].name;
        for (const auto& w : output_wires_[b]) out << " " << wire_text(*this, w);
        out << "\n";
    }
    return out.str();
}

Netlist Netlist::parse(const std::string& text) {
    Netlist net;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    const auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    const auto parse_wire = [&](const std::string& tok) -> WireRef {
        if (tok.size() >= 2 && tok[0] == 'g' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
            return WireRef::gate(static_cast<std::uint32_t>(std::stoul(tok.substr(1))));
        }
        const auto lb = tok.find('[');
        const auto rb = tok.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
            fail("bad wire reference '" + tok + "'");
        }
        const std::string bus = tok.substr(0, lb);
        const int bit = std::stoi(tok.substr(lb + 1, rb - lb - 1));
        try {
            return net.input_bit(bus, bit);
        } catch (const Error& e) {
            fail(e.what());
            return WireRef{};
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string verb;
        if (!(ls >> verb)) continue;
        if (verb == "input") {
            std::string name;
            int width = 0;
            if (!(ls >> name >> width)) fail("expected: input <bus> <width>");
            if (!net.gates_.empty()) fail("input buses must precede gates");
            net.add_input_bus(name, width);
        } else if (verb == "gate") {
            int id = -1;
            std::string kind_name;
            if (!(ls >> id >> kind_name)) fail("expected: gate <id> <KIND> ...");
            if (id != net.gate_count()) {
                fail("gate ids must be dense and ascending (expected " +
                     std::to_string(net.gate_count()) + ")");
            }
            const GateKind kind = gate_kind_from_name(kind_name);
            const int arity = gate_arity(kind);
            WireRef a, b;
            std::string tok;
            if (arity >= 1) {
                if (!(ls >> tok)) fail("missing operand");
                a = parse_wire(tok);
            }
            if (arity >= 2) {
                if (!(ls >> tok)) fail("missing second operand");
                b = parse_wire(tok);
            }
            if (ls >> tok) fail("trailing token '" + tok + "'");
            try {
                net.add_gate(kind, a, b);
            } catch (const Error& e) {
                fail(e.what());
            }
        } else if (verb == "output") {
            std::string name;
            if (!(ls >> name)) fail("expected: output <bus> <src>...");
            std::vector<WireRef> wires;
            std::string tok;
            while (ls >> tok) wires.push_back(parse_wire(tok));
            try {
                net.add_output_bus(name, std::move(wires));
            } catch (const Error& e) {
                fail(e.what());
            }
        } else {
            fail("unknown directive '" + verb + "'");
        }
    }
    return net;
}

std::map<std::string, std::vector<WireRef>> inline_netlist(
    Netlist& dst, const Netlist& sub,
    const std::map<std::string, std::vector<WireRef>>& bindings) {
    // Flattened sub input bit -> dst wire.
    std::vector<WireRef> input_map(sub.input_bit_count());
    for (const auto& bus : sub.input_buses()) {
        auto it = bindings.find(bus.name);
        if (it == bindings.end()) throw MissingInput("no binding for bus '" + bus.name + "'");
        if (static_cast<int>(it->second.size()) != bus.width) {
            throw WidthMismatch("binding width mismatch for bus '" + bus.name + "'");
        }
        for (int i = 0; i < bus.width; ++i) input_map[bus.offset + i] = it->second[i];
    }
    std::vector<WireRef> gate_map(sub.gate_count());
    const auto remap = [&](const WireRef& w) {
        return w.src == WireRef::Src::Input ? input_map[w.index] : gate_map[w.index];
    };
    for (int id = 0; id < sub.gate_count(); ++id) {
        const auto& g = sub.gates()[id];
        const int arity = gate_arity(g.kind);
        gate_map[id] = WireRef::gate(static_cast<std::uint32_t>(
            dst.add_gate(g.kind, arity >= 1 ? remap(g.a) : WireRef{},
                         arity >= 2 ? remap(g.b) : WireRef{})));
    }
    std::map<std::string, std::vector<WireRef>> outputs;
    for (std::size_t b = 0; b < sub.output_buses().size(); ++b) {
        std::vector<WireRef> wires;
        for (const auto& w : sub.output_wires()[b]) wires.push_back(remap(w));
        outputs[sub.output_buses()[b].name] = std::move(wires);
    }
    return outputs;
}

Netlist extract_cone(const Netlist& net, int output_bit) {
    if (output_bit < 0 || output_bit >= net.output_bit_count()) {
        throw WidthMismatch("output bit out of range");
    }
    WireRef source;
    int pos = 0;
    for (std::size_t b = 0; b < net.output_wires().size(); ++b) {
        for (const auto& w : net.output_wires()[b]) {
            if (pos == output_bit) source = w;
            ++pos;
        }
    }

    Netlist cone;
    for (const auto& bus : net.input_buses()) cone.add_input_bus(bus.name, bus.width);
    if (source.src == WireRef::Src::Input) {
        cone.add_output_bus("z", {source});
        return cone;
    }

    // Mark the fan-in cone, then re-emit the marked gates in id order.
    std::vector<std::uint8_t> in_cone(net.gate_count(), 0);
    std::vector<std::uint32_t> stack{source.index};
    while (!stack.empty()) {
        const std::uint32_t id = stack.back();
        stack.pop_back();
        if (in_cone[id]) continue;
        in_cone[id] = 1;
        const auto& g = net.gates()[id];
        const int arity = gate_arity(g.kind);
        if (arity >= 1 && g.a.src == WireRef::Src::Gate) stack.push_back(g.a.index);
        if (arity >= 2 && g.b.src == WireRef::Src::Gate) stack.push_back(g.b.index);
    }
    std::vector<WireRef> gate_map(net.gate_count());
    for (int id = 0; id < net.gate_count(); ++id) {
        if (!in_cone[id]) continue;
        const auto& g = net.gates()[id];
        const int arity = gate_arity(g.kind);
        const auto remap = [&](const WireRef& w) {
            return w.src == WireRef::Src::Input ? w : gate_map[w.index];
        };
        gate_map[id] = WireRef::gate(static_cast<std::uint32_t>(
            cone.add_gate(g.kind, arity >= 1 ? remap(g.a) : WireRef{},
                          arity >= 2 ? remap(g.b) : WireRef{})));
    }
    cone.add_output_bus("z", {gate_map[source.index]});
    return cone;
}

}  // namespace eccalu
