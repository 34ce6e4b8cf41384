#ifndef ECCALU_BLOCKS_HPP
#define ECCALU_BLOCKS_HPP

#include <map>
#include <string>

#include "eccalu/codec.hpp"
#include "eccalu/netlist.hpp"

namespace eccalu {

enum class BlockOp { XOR, AND, OR, NOT, NAND, NOR, ADD, SUB };

const char* block_op_name(BlockOp op);
BlockOp block_op_from_name(const std::string& name);

// Software oracle for a block operation on data values of the given width.
// NOT ignores b.
std::uint64_t block_op_result(BlockOp op, std::uint64_t a, std::uint64_t b, int width);

// Distance-preserving blocks. All take codeword operands on input buses
// x and y of width n and produce the result codeword on output bus z of
// width n; every gate's output cone is a single output bit, so one gate
// fault corrupts at most one unit of the result.

// n two-input XOR gates, z[i] = x[i] ^ y[i]; valid for any binary linear
// code since parity bits are themselves XOR-linear in the data.
Netlist build_xor_block(const CodeSpec& code);

// Bitwise AND/OR/NAND/NOR/NOT for Hamming-family codes. The data path is one
// gate per data bit; each parity bit gets a private replica of the data gates
// in its parity-row support, reduced by a private XOR tree. NOT complements
// every unit via per-bit CONST1 + XOR (the complemented codeword must itself
// be a codeword). With include_input_correctors, a corrector is inlined in
// front of each operand (corrector gates come first and are exempt from the
// cone-disjointness contract).
Netlist build_bitwise_block(BlockOp op, const CodeSpec& code, bool include_input_correctors);

// Same replication scheme over a binary BCH parity matrix; up to t gate
// faults in distinct cones stay within the code's correction radius.
Netlist build_bch_bitwise_block(BlockOp op, const CodeSpec& code);

// Ripple-carry add/subtract, width = code.k. Every output bit - data and
// parity alike - gets a full private replica adder; parity replicas feed
// private XOR trees. Carry-in is 0 (ADD) or 1 with y complemented inside
// each replica (SUB, two's complement); carry-out is dropped.
Netlist build_hamming_adder(const CodeSpec& code, int width, bool subtract = false);

// Four-operation ALU with a 2-bit control bus c. The operand blocks AND the
// opcode decode/select logic are replicated per output bit, so control-path
// faults are confined to one output unit like any other fault.
Netlist build_opcode_alu(const CodeSpec& code, const std::map<int, BlockOp>& op_table);

// Syndrome-decode-and-fix circuit, input bus x / output bus z of width n.
// This is the unprotected final stage; its gates legitimately fan out to many
// output bits.
Netlist build_corrector(const CodeSpec& code);

// Unencoded data path of an operation (plain gates, one shared ripple adder
// for ADD/SUB): the base unit that TMR replicates, and the yardstick for
// redundancy comparisons.
Netlist build_raw_block(BlockOp op, int width);
Netlist build_raw_opcode_alu(int width, const std::map<int, BlockOp>& op_table);

// {00:XOR, 01:NAND, 10:ADD, 11:NOT}
std::map<int, BlockOp> default_op_table();

}  // namespace eccalu

#endif
