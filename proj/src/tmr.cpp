#include "eccalu/tmr.hpp"

#include <numeric>

namespace eccalu {

namespace {

// All (r+1)-subsets of {0..2r}; a majority exists iff some subset is all
// ones. Exponential in r, but r stays small at desk scale.
std::vector<std::vector<int>> majority_subsets(int r) {
    const int w = 2 * r + 1;
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(r + 1);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        subsets.push_back(pick);
        int i = r;
        while (i >= 0 && pick[i] == w - (r + 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return subsets;
}

}  // namespace

int voter_gate_count(int r) {
    const int subsets = static_cast<int>(majority_subsets(r).size());
    return subsets * r + (subsets - 1);
}

Netlist build_tmr(const Netlist& base, int r) {
    if (r < 1) throw Error("replication factor r must be >= 1");
    const int copies = 2 * r + 1;

    Netlist net;
    std::map<std::string, std::vector<WireRef>> bindings;
    for (const auto& bus : base.input_buses()) {
        net.add_input_bus(bus.name, bus.width);
        std::vector<WireRef> wires;
        for (int i = 0; i < bus.width; ++i) wires.push_back(net.input_bit(bus.name, i));
        bindings[bus.name] = wires;
    }

    // replica outputs: [copy][bus][bit]
    std::vector<std::map<std::string, std::vector<WireRef>>> replicas;
    replicas.reserve(copies);
    for (int c = 0; c < copies; ++c) {
        replicas.push_back(inline_netlist(net, base, bindings));
    }

    const auto subsets = majority_subsets(r);
    for (std::size_t b = 0; b < base.output_buses().size(); ++b) {
        const auto& bus = base.output_buses()[b];
        std::vector<WireRef> voted;
        for (int bit = 0; bit < bus.width; ++bit) {
            std::vector<WireRef> terms;
            for (const auto& subset : subsets) {
                WireRef acc = replicas[subset[0]].at(bus.name)[bit];
                for (std::size_t i = 1; i < subset.size(); ++i) {
                    acc = WireRef::gate(static_cast<std::uint32_t>(net.add_gate(
                        GateKind::AND, acc, replicas[subset[i]].at(bus.name)[bit])));
                }
                terms.push_back(acc);
            }
            WireRef acc = terms[0];
            for (std::size_t i = 1; i < terms.size(); ++i) {
                acc = WireRef::gate(
                    static_cast<std::uint32_t>(net.add_gate(GateKind::OR, acc, terms[i])));
            }
            voted.push_back(acc);
        }
        net.add_output_bus(bus.name, std::move(voted));
    }
    return net;
}

int vote(const std::vector<int>& values) {
    if (values.size() < 3 || values.size() % 2 == 0) {
        throw EvenLength("majority vote needs an odd list of length >= 3");
    }
    int ones = 0;
    for (int v : values) ones += v ? 1 : 0;
    return ones > static_cast<int>(values.size()) / 2 ? 1 : 0;
}

}  // namespace eccalu
