#include "eccalu/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccalu/costmodel.hpp"
#include "eccalu/faultsim.hpp"
#include "eccalu/tmr.hpp"

namespace eccalu {

namespace {

Netlist load_netlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open netlist '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Netlist::parse(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

Netlist build_ecc_block(const std::string& block, const CodeSpec& code, bool correctors) {
    if (block == "xor") return build_xor_block(code);
    if (block == "add") return build_hamming_adder(code, code.k());
    if (block == "sub") return build_hamming_adder(code, code.k(), true);
    if (block == "opcode-alu") return build_opcode_alu(code, default_op_table());
    if (block == "corrector") return build_corrector(code);
    if (block == "bch-nand") return build_bch_bitwise_block(BlockOp::NAND, code);
    return build_bitwise_block(block_op_from_name(block), code, correctors);
}

int cmd_build(const std::string& block, const std::string& code_name, const std::string& arch,
              int r, bool correctors, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    try {
        const CodeSpec code = code_by_name(code_name);
        Netlist net;
        if (arch == "tmr") {
            if (block == "corrector" || block == "bch-nand") {
                err << "error: --arch tmr does not apply to block '" << block << "'\n";
                return 2;
            }
            const Netlist base = block == "opcode-alu"
                                     ? build_raw_opcode_alu(code.k(), default_op_table())
                                     : build_raw_block(block_op_from_name(block), code.k());
            net = build_tmr(base, r);
        } else {
            net = build_ecc_block(block, code, correctors);
        }
        write_file(out_path, net.serialize());
        out << "wrote " << out_path << " (" << net.gate_count() << " gates)\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

struct VerifyContext {
    CampaignConfig config;
    int threads = 1;
};

std::uint64_t data_width_mask(int bits) { return bits >= 64 ? ~0ull : ((1ull << bits) - 1); }

// Phase 1 of verify: fault-free exhaustive equivalence against the software
// oracle. Returns the first counterexample as text, or empty when clean.
std::string verify_equivalence(const CampaignConfig& config) {
    const Netlist& net = *config.netlist;
    const int ka = config.decode ? config.decode->k() : net.input_bus_width("x");
    const int kb = config.decode ? config.decode->k() : net.input_bus_width("y");
    const bool has_c = net.has_input_bus("c");
    for (std::uint64_t a = 0, amax = 1ull << ka; a < amax; ++a) {
        for (std::uint64_t b = 0, bmax = 1ull << kb; b < bmax; ++b) {
            for (std::uint64_t c = 0, cmax = has_c ? 4 : 1; c < cmax; ++c) {
                Assignment in;
                if (config.decode) {
                    const auto xw = encode(value_to_units(a, ka), *config.decode);
                    const auto yw = encode(value_to_units(b, kb), *config.decode);
                    in["x"] = std::vector<std::uint8_t>(xw.units.begin(), xw.units.end());
                    in["y"] = std::vector<std::uint8_t>(yw.units.begin(), yw.units.end());
                } else {
                    const auto to_bits = [](std::uint64_t v, int w) {
                        std::vector<std::uint8_t> bits(w);
                        for (int i = 0; i < w; ++i) bits[i] = (v >> i) & 1;
                        return bits;
                    };
                    in["x"] = to_bits(a, ka);
                    in["y"] = to_bits(b, kb);
                }
                if (has_c) in["c"] = {static_cast<std::uint8_t>(c & 1),
                                      static_cast<std::uint8_t>((c >> 1) & 1)};
                const auto result = net.evaluate(in).at("z");
                const BlockOp op = config.oracle.is_alu
                                       ? config.oracle.op_table.at(static_cast<int>(c))
                                       : config.oracle.op;
                const std::uint64_t want = block_op_result(op, a, b, ka);
                std::uint64_t got;
                if (config.decode) {
                    std::vector<std::uint16_t> units(result.begin(), result.end());
                    const auto fixed = correct(units, *config.decode);
                    if (!fixed) {
                        got = ~want;  // undecodable clean output is a violation
                    } else {
                        got = units_to_value(fixed->data);
                    }
                } else {
                    std::uint64_t v = 0;
                    for (std::size_t i = 0; i < result.size(); ++i) {
                        if (result[i]) v |= 1ull << i;
                    }
                    got = v & data_width_mask(ka);
                }
                if (got != want) {
                    std::ostringstream msg;
                    msg << "fault-free mismatch at a=" << a << " b=" << b;
                    if (has_c) msg << " c=" << c;
                    msg << ": got " << got << ", expected " << want;
                    return msg.str();
                }
            }
        }
    }
    return {};
}

int cmd_verify(const std::string& netlist_path, const std::string& code_name,
               const std::string& op_name, const std::string& arch, int r, bool stuck_at,
               bool include_voter_faults, int threads, std::ostream& out, std::ostream& err) {
    CampaignConfig config;
    try {
        config.netlist = std::make_shared<Netlist>(load_netlist(netlist_path));
        config.netlist_label = netlist_path;
        if (code_name != "none") config.decode = code_by_name(code_name);
        if (op_name == "opcode-alu") {
            config.oracle.is_alu = true;
            config.oracle.op_table = default_op_table();
        } else {
            config.oracle.op = block_op_from_name(op_name);
        }
        config.input_mode = InputMode::Exhaustive;
        config.fault_mode = FaultMode::ExhaustiveSingle;
        config.fault_kinds = {FaultKind::TransientFlip};
        if (stuck_at) {
            config.fault_kinds.push_back(FaultKind::StuckAt0);
            config.fault_kinds.push_back(FaultKind::StuckAt1);
        }
        if (arch == "tmr" && !include_voter_faults) {
            const int voters =
                config.netlist->output_bit_count() * voter_gate_count(r);
            const int boundary = config.netlist->gate_count() - voters;
            if (boundary <= 0) throw Error("netlist smaller than its voter stage");
            config.fault_gate_range = {0, boundary};
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::string mismatch = verify_equivalence(config);
        if (!mismatch.empty()) {
            out << "VIOLATION " << mismatch << "\n";
            return 1;
        }
        const CampaignReport report = run_exhaustive_single_fault(config, threads);
        out << "single-fault sweep: trials=" << report.trials
            << " corrected=" << report.corrected << " masked=" << report.masked
            << " silent_wrong=" << report.silent_wrong
            << " detected_uncorrectable=" << report.detected_uncorrectable << "\n";
        if (report.silent_wrong == 0 && report.detected_uncorrectable == 0) {
            out << "OK " << netlist_path << "\n";
            return 0;
        }
        // Counterexample-first: locate the first failing trial.
        const std::uint64_t total = campaign_trial_count(config);
        const std::uint64_t kinds = config.fault_kinds.size();
        const std::uint64_t gates = total / kinds /
                                    ((1ull << (config.decode ? config.decode->k()
                                                             : config.netlist->input_bus_width("x"))) *
                                     (1ull << (config.decode ? config.decode->k()
                                                             : config.netlist->input_bus_width("y"))) *
                                     (config.netlist->has_input_bus("c") ? 4 : 1));
        for (std::uint64_t t = 0; t < total; ++t) {
            const CampaignReport one = run_trial_range(config, t, t + 1);
            if (one.silent_wrong || one.detected_uncorrectable) {
                const std::uint64_t per_input = gates * kinds;
                const std::uint64_t idx = t / per_input;
                const std::uint64_t rem = t % per_input;
                const int gate_pos = static_cast<int>(rem / kinds);
                const FaultKind kind = config.fault_kinds[rem % kinds];
                const bool has_c = config.netlist->has_input_bus("c");
                const std::uint64_t kb = config.decode
                                             ? config.decode->k()
                                             : config.netlist->input_bus_width("y");
                const std::uint64_t per_a = (1ull << kb) * (has_c ? 4 : 1);
                const std::uint64_t a = idx / per_a;
                const std::uint64_t rem2 = idx % per_a;
                const std::uint64_t b = has_c ? rem2 / 4 : rem2;
                const std::uint64_t c = has_c ? rem2 % 4 : 0;
                const int gate_id = config.fault_gate_range
                                        ? config.fault_gate_range->first + gate_pos
                                        : gate_pos;
                out << "VIOLATION first counterexample: a=" << a << " b=" << b;
                if (has_c) out << " c=" << c;
                out << " gate=g" << gate_id << " fault="
                    << (kind == FaultKind::TransientFlip ? "transient"
                        : kind == FaultKind::StuckAt0    ? "stuck0"
                                                         : "stuck1")
                    << " outcome="
                    << (one.silent_wrong ? "silent_wrong" : "detected_uncorrectable") << "\n";
                break;
            }
        }
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_inject(const std::string& config_path, const std::string& csv_path,
               const std::string& json_path, int threads, std::ostream& out, std::ostream& err) {
    nlohmann::json raw;
    try {
        std::ifstream in(config_path);
        if (!in) {
            err << "error: cannot open config '" << config_path << "'\n";
            return 2;
        }
        raw = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        err << "error: config is not valid JSON: " << e.what() << "\n";
        return 2;
    }
    try {
        std::string dir = ".";
        const auto slash = config_path.rfind('/');
        if (slash != std::string::npos) dir = config_path.substr(0, slash);
        const CampaignConfig config = parse_campaign_config(raw, dir);
        CampaignReport report;
        if (config.input_mode == InputMode::Exhaustive &&
            config.fault_mode == FaultMode::ExhaustiveSingle) {
            report = run_exhaustive_single_fault(config, threads);
        } else if (config.input_mode == InputMode::Random &&
                   config.fault_mode == FaultMode::Random) {
            report = run_random_campaign(config, threads);
        } else {
            err << "error: config key 'fault_mode': unsupported mode combination\n";
            return 2;
        }
        if (!csv_path.empty()) write_file(csv_path, report.to_csv());
        if (!json_path.empty()) write_file(json_path, report.to_json().dump(2) + "\n");
        out << "trials=" << report.trials << " corrected=" << report.corrected
            << " masked=" << report.masked << " silent_wrong=" << report.silent_wrong
            << " detected_uncorrectable=" << report.detected_uncorrectable << "\n";
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_cost(int width, int r, const std::string& json_path, std::ostream& out,
             std::ostream& err) {
    try {
        const CodeSpec code = CodeSpec::hamming(width);
        const Netlist raw_adder = build_raw_block(BlockOp::ADD, width);
        const Netlist ecc_adder = build_hamming_adder(code, width);
        const Netlist corrector = build_corrector(code);
        const Netlist tmr_adder = build_tmr(raw_adder, r);

        const nlohmann::json j = {
            {"width", width},
            {"r", r},
            {"tmr_redundancy", tmr_redundancy(width, r)},
            {"sec_parity_bits", hamming_parity_count(width, false)},
            {"secded_parity_bits", hamming_parity_count(width, true)},
            {"bcp_check_bits", bcp_bits(width)},
            {"raw_adder_gates", raw_adder.gate_count()},
            {"ecc_adder_gates", ecc_adder.gate_count()},
            {"corrector_gates", corrector.gate_count()},
            {"ecc_total_gates", ecc_adder.gate_count() + corrector.gate_count()},
            {"tmr_adder_gates", tmr_adder.gate_count()},
            {"ecc_final_stage_units", 1},
            {"tmr_final_stage_units", width}};
        out << std::left << std::setw(26) << "metric" << "value\n";
        for (const char* key : {"width", "r", "tmr_redundancy", "sec_parity_bits",
                                "secded_parity_bits", "bcp_check_bits", "raw_adder_gates",
                                "ecc_adder_gates", "corrector_gates", "ecc_total_gates",
                                "tmr_adder_gates", "ecc_final_stage_units",
                                "tmr_final_stage_units"}) {
            out << std::left << std::setw(26) << key << j[key].get<long long>() << "\n";
        }
        if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_compare(const std::string& block, const std::string& code_name, int r,
                const std::string& json_path, std::ostream& out, std::ostream& err) {
    try {
        const CodeSpec code = code_by_name(code_name);
        const BlockOp op = block_op_from_name(block);
        const ArchitectureComparison cmp = compare_architectures(op, code, r);
        out << std::left << std::setw(14) << "architecture" << std::setw(8) << "total"
            << std::setw(11) << "redundant" << std::setw(19) << "final_stage_gates"
            << "final_stage_units\n";
        for (const CostReport* rep : {&cmp.ecc, &cmp.tmr}) {
            out << std::left << std::setw(14) << rep->architecture << std::setw(8) << rep->total
                << std::setw(11) << rep->redundant << std::setw(19) << rep->final_stage_gates
                << rep->final_stage_units << "\n";
        }
        out << "raw_gates " << cmp.raw_gates << "\n";
        out << "tmr_redundancy " << tmr_redundancy(code.k(), r) << "\n";
        if (!json_path.empty()) {
            const nlohmann::json j = {{"raw_gates", cmp.raw_gates},
                                      {"tmr_redundancy", tmr_redundancy(code.k(), r)},
                                      {"ecc", cost_report_to_json(cmp.ecc)},
                                      {"tmr", cost_report_to_json(cmp.tmr)}};
            write_file(json_path, j.dump(2) + "\n");
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::vector<std::uint16_t> parse_units(const std::string& text, bool symbols) {
    std::vector<std::uint16_t> units;
    if (symbols) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            units.push_back(static_cast<std::uint16_t>(std::stoi(tok)));
        }
    } else {
        for (char ch : text) {
            if (ch != '0' && ch != '1') throw Error("bit strings may contain only 0 and 1");
            units.push_back(ch == '1');
        }
    }
    return units;
}

std::string units_text(const std::vector<std::uint16_t>& units, bool symbols) {
    std::ostringstream out;
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (symbols) {
            if (i) out << ",";
            out << units[i];
        } else {
            out << (units[i] ? '1' : '0');
        }
    }
    return out.str();
}

int cmd_encode(const std::string& code_name, const std::string& data_text, std::ostream& out,
               std::ostream& err) {
    try {
        const CodeSpec code = code_by_name(code_name);
        const bool symbols = code.kind() == CodeKind::Rs;
        const auto data = parse_units(data_text, symbols);
        const Codeword cw = encode(data, code);
        out << units_text(cw.units, symbols) << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_decode(const std::string& code_name, const std::string& word_text, std::ostream& out,
               std::ostream& err) {
    try {
        const CodeSpec code = code_by_name(code_name);
        const bool symbols = code.kind() == CodeKind::Rs;
        const auto word = parse_units(word_text, symbols);
        const auto fixed = correct(word, code);
        if (!fixed) {
            out << "uncorrectable\n";
            return 1;
        }
        out << "data " << units_text(fixed->data, symbols) << "\n";
        out << "corrected_positions";
        for (int pos : fixed->errors_found) out << " " << pos;
        out << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distance-preserving ALU blocks, fault campaigns and cost model"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "emit a block as a netlist file");
    std::string b_block, b_code, b_arch = "ecc", b_out;
    int b_r = 1;
    bool b_correctors = false;
    build->add_option("--block", b_block, "xor|and|or|not|nand|nor|add|sub|opcode-alu|corrector|bch-nand")
        ->required();
    build->add_option("--code", b_code, "code preset name")->required();
    build->add_option("--arch", b_arch, "ecc|tmr")->check(CLI::IsMember({"ecc", "tmr"}));
    build->add_option("--r", b_r, "TMR tolerated faults per cone");
    build->add_flag("--with-input-correctors", b_correctors, "prepend operand correctors");
    build->add_option("--out", b_out, "output netlist path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "fault-free equivalence + single-fault sweep");
    std::string v_netlist, v_code, v_op, v_arch = "ecc";
    int v_r = 1, v_threads = 1;
    bool v_exhaustive = false, v_stuck = false, v_voters = false;
    verify->add_option("--netlist", v_netlist)->required();
    verify->add_option("--code", v_code, "code preset name, or 'none' for raw outputs")
        ->required();
    verify->add_option("--op", v_op, "block operation or opcode-alu")->required();
    verify->add_option("--arch", v_arch, "ecc|tmr")->check(CLI::IsMember({"ecc", "tmr"}));
    verify->add_option("--r", v_r, "TMR replication parameter (voter-stage layout)");
    verify->add_flag("--exhaustive", v_exhaustive, "exhaustive sweep (always on)");
    verify->add_flag("--stuck-at", v_stuck, "also sweep stuck-at-0/1 faults");
    verify->add_flag("--include-voter-faults", v_voters, "fault the TMR voter gates too");
    verify->add_option("--threads", v_threads);

    // inject
    auto* inject = app.add_subcommand("inject", "run a campaign from a JSON config");
    std::string i_config, i_csv, i_json;
    int i_threads = 1;
    inject->add_option("--config", i_config)->required();
    inject->add_option("--report", i_csv, "CSV report path");
    inject->add_option("--json", i_json, "JSON report path");
    inject->add_option("--threads", i_threads);

    // cost
    auto* cost = app.add_subcommand("cost", "redundancy formulas and measured gate counts");
    int c_width = 32, c_r = 1;
    std::string c_json;
    cost->add_option("--width", c_width)->required();
    cost->add_option("--r", c_r);
    cost->add_option("--json", c_json, "also write the table as JSON");

    // compare
    auto* compare = app.add_subcommand("compare", "ECC block + corrector vs TMR of the raw block");
    std::string p_block, p_code, p_json;
    int p_r = 1;
    compare->add_option("--block", p_block)->required();
    compare->add_option("--code", p_code)->required();
    compare->add_option("--r", p_r);
    compare->add_option("--json", p_json, "also write the reports as JSON");

    // encode / decode
    auto* enc = app.add_subcommand("encode", "encode data units (debugging)");
    std::string e_code, e_data;
    enc->add_option("--code", e_code)->required();
    enc->add_option("--data", e_data, "bit string (unit order) or comma symbols for RS")
        ->required();
    auto* dec = app.add_subcommand("decode", "decode/correct a word (debugging)");
    std::string d_code, d_word;
    dec->add_option("--code", d_code)->required();
    dec->add_option("--word", d_word)->required();

    std::vector<std::string> argv_store;
    argv_store.push_back(kToolName);
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << kToolName << " " << kToolVersion << "\n";
    out << "args:";
    for (const auto& a : args) out << " " << a;
    out << "\n";

    if (build->parsed()) {
        return cmd_build(b_block, b_code, b_arch, b_r, b_correctors, b_out, out, err);
    }
    if (verify->parsed()) {
        (void)v_exhaustive;  // sweeps are exhaustive at these sizes
        return cmd_verify(v_netlist, v_code, v_op, v_arch, v_r, v_stuck, v_voters, v_threads,
                          out, err);
    }
    if (inject->parsed()) return cmd_inject(i_config, i_csv, i_json, i_threads, out, err);
    if (cost->parsed()) return cmd_cost(c_width, c_r, c_json, out, err);
    if (compare->parsed()) return cmd_compare(p_block, p_code, p_r, p_json, out, err);
    if (enc->parsed()) return cmd_encode(e_code, e_data, out, err);
    if (dec->parsed()) return cmd_decode(d_code, d_word, out, err);
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace eccalu
