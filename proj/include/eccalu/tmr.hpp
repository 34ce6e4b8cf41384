#ifndef ECCALU_TMR_HPP
#define ECCALU_TMR_HPP

#include <vector>

#include "eccalu/netlist.hpp"

namespace eccalu {

// (2r+1)-way modular redundancy: disjoint replicas of the base netlist plus
// a per-output-bit majority voter built from 2-input AND/OR gates (so a
// "gate fault" is the same unit in both architectures). Replica gates come
// first; all voter gates follow them.
Netlist build_tmr(const Netlist& base, int r);

// Gates in one majority voter for replication factor 2r+1. For r=1:
// maj(a,b,c) = ab + bc + ca, 3 AND + 2 OR = 5 gates.
int voter_gate_count(int r);

// Majority of an odd-length bit list.
int vote(const std::vector<int>& values);

}  // namespace eccalu

#endif
