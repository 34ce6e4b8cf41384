#include "eccalu/faultsim.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <thread>

namespace eccalu {

const char* trial_outcome_name(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::Corrected: return "corrected";
        case TrialOutcome::Masked: return "masked";
        case TrialOutcome::SilentWrong: return "silent_wrong";
        case TrialOutcome::DetectedUncorrectable: return "detected_uncorrectable";
    }
    return "?";
}

std::uint64_t CampaignReport::count(TrialOutcome o) const {
    switch (o) {
        case TrialOutcome::Corrected: return corrected;
        case TrialOutcome::Masked: return masked;
        case TrialOutcome::SilentWrong: return silent_wrong;
        case TrialOutcome::DetectedUncorrectable: return detected_uncorrectable;
    }
    return 0;
}

void CampaignReport::record(TrialOutcome o, int gate_for_silent_wrong) {
    ++trials;
    switch (o) {
        case TrialOutcome::Corrected: ++corrected; break;
        case TrialOutcome::Masked: ++masked; break;
        case TrialOutcome::SilentWrong:
            ++silent_wrong;
            ++silent_wrong_by_gate[gate_for_silent_wrong];
            break;
        case TrialOutcome::DetectedUncorrectable: ++detected_uncorrectable; break;
    }
}

void CampaignReport::merge(const CampaignReport& other) {
    corrected += other.corrected;
    masked += other.masked;
    silent_wrong += other.silent_wrong;
    detected_uncorrectable += other.detected_uncorrectable;
    trials += other.trials;
    for (const auto& [gate, cnt] : other.silent_wrong_by_gate) {
        silent_wrong_by_gate[gate] += cnt;
    }
}

std::string CampaignReport::to_csv() const {
    std::ostringstream out;
    out << "outcome,count\n";
    out << "corrected," << corrected << "\n";
    out << "masked," << masked << "\n";
    out << "silent_wrong," << silent_wrong << "\n";
    out << "detected_uncorrectable," << detected_uncorrectable << "\n";
    out << "trials," << trials << "\n";
    return out.str();
}

nlohmann::json CampaignReport::to_json() const {
    nlohmann::json j;
    j["config"] = config_echo;
    j["generator"] = generator;
    j["outcomes"] = {{"corrected", corrected},
                     {"masked", masked},
                     {"silent_wrong", silent_wrong},
                     {"detected_uncorrectable", detected_uncorrectable}};
    nlohmann::json by_gate = nlohmann::json::object();
    for (const auto& [gate, cnt] : silent_wrong_by_gate) {
        by_gate[std::to_string(gate)] = cnt;
    }
    j["silent_wrong_by_gate"] = by_gate;
    j["trials"] = trials;
    return j;
}

namespace {

TrialOutcome classify_decoded(bool raw_equal,
                              const std::optional<std::vector<std::uint16_t>>& decoded,
                              const std::vector<std::uint16_t>& oracle) {
    if (raw_equal) return TrialOutcome::Masked;  // masked wins over corrected
    if (!decoded) return TrialOutcome::DetectedUncorrectable;
    return *decoded == oracle ? TrialOutcome::Corrected : TrialOutcome::SilentWrong;
}

}  // namespace

TrialOutcome classify(std::span<const std::uint8_t> raw_faulty,
                      std::span<const std::uint8_t> raw_golden,
                      const std::optional<std::vector<std::uint16_t>>& decoded_data,
                      const std::vector<std::uint16_t>& oracle_data) {
    const bool raw_equal = std::equal(raw_faulty.begin(), raw_faulty.end(), raw_golden.begin(),
                                      raw_golden.end());
    return classify_decoded(raw_equal, decoded_data, oracle_data);
}

namespace {

// Campaign geometry resolved once per run.
struct Plan {
    const Netlist* net = nullptr;
    int x_offset = 0, y_offset = 0, c_offset = 0;
    int x_width = 0, y_width = 0;
    bool has_c = false;
    int ka = 0, kb = 0;  // enumerated data widths
    int n_out = 0;
    std::vector<int> allowed_gates;
    std::vector<std::uint64_t> cone_masks;  // per gate, over output bits
    std::uint64_t input_count = 0;          // exhaustive input assignments
};

std::uint64_t encode_word_mask(const CodeSpec& spec, std::uint64_t data) {
    std::uint64_t w = data;
    const auto& rows = spec.parity_rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        w |= static_cast<std::uint64_t>(std::popcount(data & rows[j]) & 1)
             << (spec.k() + j);
    }
    return w;
}

Plan make_plan(const CampaignConfig& config) {
    if (!config.netlist) throw ConfigError("netlist", "no netlist set");
    const Netlist& net = *config.netlist;
    Plan plan;
    plan.net = &net;
    if (!net.has_input_bus("x") || !net.has_input_bus("y")) {
        throw ConfigError("netlist", "campaign netlists need input buses 'x' and 'y'");
    }
    plan.x_width = net.input_bus_width("x");
    plan.y_width = net.input_bus_width("y");
    plan.x_offset = static_cast<int>(net.input_bit("x", 0).index);
    plan.y_offset = static_cast<int>(net.input_bit("y", 0).index);
    plan.has_c = net.has_input_bus("c");
    if (plan.has_c) {
        if (net.input_bus_width("c") != 2) {
            throw ConfigError("netlist", "control bus 'c' must have width 2");
        }
        plan.c_offset = static_cast<int>(net.input_bit("c", 0).index);
    }
    if (config.oracle.is_alu && !plan.has_c) {
        throw ConfigError("oracle", "opcode-alu oracle needs a control bus 'c'");
    }
    if (config.decode) {
        const CodeSpec& code = *config.decode;
        if (!code.is_binary()) throw ConfigError("decode", "gate-level decode must be binary");
        if (plan.x_width != code.n() || plan.y_width != code.n()) {
            throw ConfigError("decode", "operand bus width does not match code length n");
        }
        plan.ka = code.k();
        plan.kb = code.k();
    } else {
        plan.ka = plan.x_width;
        plan.kb = plan.y_width;
    }
    plan.n_out = net.output_bit_count();
    if (plan.n_out > 64) throw ConfigError("netlist", "more than 64 output bits");

    if (config.fault_kinds.empty() &&
        (config.fault_mode == FaultMode::ExhaustiveSingle || config.budget > 0)) {
        throw ConfigError("fault_kinds", "no fault kinds enabled");
    }
    if (config.input_errors.weight > plan.x_width + plan.y_width) {
        throw ConfigError("input_errors", "weight exceeds the operand bit count");
    }
    int from = 0, to = net.gate_count();
    if (config.fault_gate_range) {
        from = config.fault_gate_range->first;
        to = config.fault_gate_range->second;
        if (from < 0 || to > net.gate_count() || from >= to) {
            throw ConfigError("fault_gates", "gate range out of bounds");
        }
    }
    for (int g = from; g < to; ++g) plan.allowed_gates.push_back(g);

    if (config.distinct_cones) {
        const auto cones = net.output_cones();
        plan.cone_masks.assign(net.gate_count(), 0);
        for (int g = 0; g < net.gate_count(); ++g) {
            for (int bit : cones[g]) plan.cone_masks[g] |= 1ull << bit;
        }
    }
    plan.input_count =
        (1ull << plan.ka) * (1ull << plan.kb) * (plan.has_c ? 4 : 1);
    return plan;
}

struct TrialScratch {
    std::vector<std::uint8_t> inputs;
    std::vector<std::uint8_t> gates;
    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> golden_out;
    std::uint64_t golden_key = ~0ull;
    std::vector<FaultSpec> faults;
};

void write_bits(std::vector<std::uint8_t>& flat, int offset, int width, std::uint64_t value) {
    for (int i = 0; i < width; ++i) flat[offset + i] = (value >> i) & 1;
}

// One campaign trial; the entire trial (inputs, corruption, fault choice) is
// a pure function of (config, trial index).
void run_one_trial(const CampaignConfig& config, const Plan& plan, std::uint64_t trial,
                   TrialScratch& scratch, CampaignReport& report) {
    const Netlist& net = *plan.net;
    scratch.inputs.assign(net.input_bit_count(), 0);
    scratch.gates.resize(net.gate_count());
    scratch.out.resize(plan.n_out);
    scratch.golden_out.resize(plan.n_out);
    scratch.faults.clear();

    const std::uint64_t kinds = config.fault_kinds.size();
    std::uint64_t a = 0, b = 0, c = 0;
    std::uint64_t input_key = 0;

    TrialRng rng(config.seed, trial);
    if (config.input_mode == InputMode::Exhaustive) {
        std::uint64_t idx;
        if (config.fault_mode == FaultMode::ExhaustiveSingle) {
            idx = trial / (plan.allowed_gates.size() * kinds);
            const std::uint64_t rem = trial % (plan.allowed_gates.size() * kinds);
            scratch.faults.push_back(
                {plan.allowed_gates[rem / kinds], config.fault_kinds[rem % kinds]});
        } else {
            idx = trial;
        }
        input_key = idx;
        const std::uint64_t per_a = (1ull << plan.kb) * (plan.has_c ? 4 : 1);
        a = idx / per_a;
        const std::uint64_t rem = idx % per_a;
        b = plan.has_c ? rem / 4 : rem;
        c = plan.has_c ? rem % 4 : 0;
    } else {
        a = rng.below(1ull << plan.ka);
        b = rng.below(1ull << plan.kb);
        if (plan.has_c) c = rng.below(4);
        input_key = trial;
    }

    if (config.fault_mode == FaultMode::Random) {
        const int nf = config.uniform_fault_count
                           ? static_cast<int>(rng.below(config.budget + 1))
                           : config.budget;
        std::uint64_t used_cones = 0;
        for (int i = 0; i < nf; ++i) {
            int attempts = 0;
            while (true) {
                if (++attempts > 100000) {
                    throw Error("cannot place faults under the distinct-cone constraint");
                }
                const int g = plan.allowed_gates[rng.below(plan.allowed_gates.size())];
                bool taken = false;
                for (const auto& f : scratch.faults) taken |= (f.gate_id == g);
                if (taken) continue;
                if (config.distinct_cones) {
                    const std::uint64_t cone = plan.cone_masks[g];
                    if (cone == 0 || (cone & used_cones)) continue;
                    used_cones |= cone;
                }
                scratch.faults.push_back(
                    {g, config.fault_kinds[rng.below(kinds)]});
                break;
            }
        }
    }

    // Operand words on the wire.
    std::uint64_t x_word, y_word;
    if (config.decode) {
        x_word = encode_word_mask(*config.decode, a);
        y_word = encode_word_mask(*config.decode, b);
    } else {
        x_word = a;
        y_word = b;
    }

    // Golden run: clean operands, no faults. Cached across trials that share
    // the input assignment (exhaustive sweeps are input-major).
    if (scratch.golden_key != input_key) {
        write_bits(scratch.inputs, plan.x_offset, plan.x_width, x_word);
        write_bits(scratch.inputs, plan.y_offset, plan.y_width, y_word);
        if (plan.has_c) write_bits(scratch.inputs, plan.c_offset, 2, c);
        net.evaluate_flat(scratch.inputs, {}, scratch.gates, scratch.golden_out);
        scratch.golden_key = input_key;
    }

    // Pre-corrupt the operands, optionally running them through a software
    // corrector first (the ideal input-corrector stage).
    if (config.input_errors.weight > 0) {
        const int total = plan.x_width + plan.y_width;
        std::uint64_t flips_x = 0, flips_y = 0;
        for (int w = 0; w < config.input_errors.weight; ++w) {
            while (true) {
                const int pos = static_cast<int>(rng.below(total));
                const std::uint64_t bit = 1ull << (pos < plan.x_width ? pos : pos - plan.x_width);
                std::uint64_t& flips = pos < plan.x_width ? flips_x : flips_y;
                if (flips & bit) continue;
                flips |= bit;
                break;
            }
        }
        x_word ^= flips_x;
        y_word ^= flips_y;
        if (config.input_errors.correct_before && config.decode) {
            for (std::uint64_t* word : {&x_word, &y_word}) {
                std::vector<std::uint16_t> units(config.decode->n());
                for (int u = 0; u < config.decode->n(); ++u) units[u] = (*word >> u) & 1;
                if (const auto fixed = correct(units, *config.decode)) {
                    *word = encode_word_mask(*config.decode, units_to_value(fixed->data));
                }
            }
        }
    }

    write_bits(scratch.inputs, plan.x_offset, plan.x_width, x_word);
    write_bits(scratch.inputs, plan.y_offset, plan.y_width, y_word);
    if (plan.has_c) write_bits(scratch.inputs, plan.c_offset, 2, c);
    net.evaluate_flat(scratch.inputs, scratch.faults, scratch.gates, scratch.out);

    const BlockOp op = config.oracle.is_alu ? config.oracle.op_table.at(static_cast<int>(c))
                                            : config.oracle.op;
    const std::uint64_t oracle_value = block_op_result(op, a, b, plan.ka);

    std::optional<std::vector<std::uint16_t>> decoded;
    std::vector<std::uint16_t> oracle_units;
    if (config.decode) {
        std::vector<std::uint16_t> units(scratch.out.begin(), scratch.out.end());
        if (const auto fixed = correct(units, *config.decode)) decoded = fixed->data;
        oracle_units = value_to_units(oracle_value, config.decode->k());
    } else {
        decoded = std::vector<std::uint16_t>(scratch.out.begin(), scratch.out.end());
        oracle_units = value_to_units(oracle_value, plan.n_out);
    }

    const TrialOutcome outcome = classify(scratch.out, scratch.golden_out, decoded, oracle_units);
    int gate_attr = -1;
    for (const auto& f : scratch.faults) {
        gate_attr = (gate_attr < 0) ? f.gate_id : std::min(gate_attr, f.gate_id);
    }
    report.record(outcome, gate_attr);
}

CampaignReport run_range_impl(const CampaignConfig& config, const Plan& plan, std::uint64_t lo,
                              std::uint64_t hi) {
    CampaignReport report;
    report.config_echo = campaign_config_to_json(config);
    TrialScratch scratch;
    for (std::uint64_t t = lo; t < hi; ++t) {
        run_one_trial(config, plan, t, scratch, report);
    }
    return report;
}

CampaignReport run_campaign(const CampaignConfig& config, int threads) {
    const Plan plan = make_plan(config);
    const std::uint64_t total = campaign_trial_count(config);
    if (threads < 1) threads = 1;
    if (threads == 1 || total < 1024) {
        return run_range_impl(config, plan, 0, total);
    }
    std::vector<CampaignReport> parts(threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        workers.emplace_back(
            [&, lo, hi, w] { parts[w] = run_range_impl(config, plan, lo, hi); });
    }
    for (auto& t : workers) t.join();
    CampaignReport report;
    report.config_echo = campaign_config_to_json(config);
    for (const auto& p : parts) report.merge(p);
    return report;
}

}  // namespace

std::uint64_t campaign_trial_count(const CampaignConfig& config) {
    const Plan plan = make_plan(config);
    if (config.input_mode == InputMode::Random) return config.trials;
    if (config.fault_mode == FaultMode::ExhaustiveSingle) {
        return plan.input_count * plan.allowed_gates.size() * config.fault_kinds.size();
    }
    return plan.input_count;
}

CampaignReport run_trial_range(const CampaignConfig& config, std::uint64_t lo, std::uint64_t hi) {
    return run_range_impl(config, make_plan(config), lo, hi);
}

CampaignReport run_exhaustive_single_fault(const CampaignConfig& config, int threads) {
    if (config.input_mode != InputMode::Exhaustive ||
        config.fault_mode != FaultMode::ExhaustiveSingle) {
        throw ConfigError("input_mode", "exhaustive sweep needs exhaustive input and "
                                        "exhaustive-single fault modes");
    }
    const Plan plan = make_plan(config);
    const int bits = plan.ka + plan.kb + (plan.has_c ? 2 : 0);
    if (bits > 20) {
        throw BoundExceeded("exhaustive input space of " + std::to_string(bits) +
                            " bits exceeds the 20-bit bound");
    }
    if (config.fault_kinds.empty()) throw ConfigError("fault_kinds", "no fault kinds enabled");
    return run_campaign(config, threads);
}

CampaignReport run_random_campaign(const CampaignConfig& config, int threads) {
    if (config.input_mode != InputMode::Random || config.fault_mode != FaultMode::Random) {
        throw ConfigError("input_mode", "random campaign needs random input and fault modes");
    }
    if (config.budget > 0 && config.fault_kinds.empty()) {
        throw ConfigError("fault_kinds", "no fault kinds enabled");
    }
    return run_campaign(config, threads);
}

nlohmann::json campaign_config_to_json(const CampaignConfig& config) {
    nlohmann::json j;
    j["netlist"] = config.netlist_label;
    j["decode"] = config.decode ? nlohmann::json(config.decode->name()) : nlohmann::json();
    if (config.oracle.is_alu) {
        nlohmann::json table = nlohmann::json::object();
        for (const auto& [v, op] : config.oracle.op_table) {
            const std::string key = {static_cast<char>('0' + ((v >> 1) & 1)),
                                     static_cast<char>('0' + (v & 1))};
            table[key] = block_op_name(op);
        }
        j["oracle"] = {{"op", "opcode-alu"}, {"op_table", table}};
    } else {
        j["oracle"] = {{"op", block_op_name(config.oracle.op)}};
    }
    j["input_mode"] = config.input_mode == InputMode::Exhaustive ? "exhaustive" : "random";
    j["fault_mode"] =
        config.fault_mode == FaultMode::ExhaustiveSingle ? "exhaustive-single" : "random";
    j["budget"] = config.budget;
    j["seed"] = config.seed;
    j["trials"] = config.trials;
    nlohmann::json kinds = nlohmann::json::array();
    for (const auto k : config.fault_kinds) {
        kinds.push_back(k == FaultKind::TransientFlip ? "transient"
                        : k == FaultKind::StuckAt0    ? "stuck0"
                                                      : "stuck1");
    }
    j["fault_kinds"] = kinds;
    j["distinct_cones"] = config.distinct_cones;
    j["fault_count"] = config.uniform_fault_count ? nlohmann::json("uniform")
                                                  : nlohmann::json(config.budget);
    if (config.fault_gate_range) {
        j["fault_gates"] = {{"from", config.fault_gate_range->first},
                            {"to", config.fault_gate_range->second}};
    }
    j["input_errors"] = {{"weight", config.input_errors.weight},
                         {"correct_before", config.input_errors.correct_before}};
    return j;
}

CampaignConfig parse_campaign_config(const nlohmann::json& j, const std::string& config_dir) {
    static const std::vector<std::string> known = {
        "netlist",     "decode",         "oracle",      "input_mode",
        "fault_mode",  "budget",         "seed",        "trials",
        "fault_kinds", "distinct_cones", "fault_count", "input_errors",
        "fault_gates"};
    if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError(key, "unknown key");
        }
    }
    CampaignConfig config;

    if (!j.contains("netlist") || !j["netlist"].is_string()) {
        throw ConfigError("netlist", "required string (path to a netlist file)");
    }
    std::string path = j["netlist"].get<std::string>();
    if (!path.empty() && path[0] != '/' && !config_dir.empty()) {
        path = config_dir + "/" + path;
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("netlist", "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        config.netlist = std::make_shared<Netlist>(Netlist::parse(buffer.str()));
    } catch (const ParseError& e) {
        throw ConfigError("netlist", std::string("parse failed: ") + e.what());
    }
    config.netlist_label = j["netlist"].get<std::string>();

    if (j.contains("decode") && !j["decode"].is_null()) {
        if (!j["decode"].is_string()) throw ConfigError("decode", "must be a code name or null");
        try {
            config.decode = code_by_name(j["decode"].get<std::string>());
        } catch (const UnsupportedCode& e) {
            throw ConfigError("decode", e.what());
        }
    }

    if (!j.contains("oracle") || !j["oracle"].is_object() || !j["oracle"].contains("op")) {
        throw ConfigError("oracle", "required object with an 'op' entry");
    }
    const std::string op_name = j["oracle"]["op"].get<std::string>();
    if (op_name == "opcode-alu") {
        config.oracle.is_alu = true;
        if (!j["oracle"].contains("op_table") || !j["oracle"]["op_table"].is_object()) {
            throw ConfigError("oracle", "opcode-alu needs an op_table object");
        }
        for (const auto& [key, value] : j["oracle"]["op_table"].items()) {
            if (key.size() != 2 || (key[0] != '0' && key[0] != '1') ||
                (key[1] != '0' && key[1] != '1')) {
                throw ConfigError("oracle", "op_table keys must be 2-bit strings like \"10\"");
            }
            const int v = (key[0] - '0') * 2 + (key[1] - '0');
            config.oracle.op_table[v] = block_op_from_name(value.get<std::string>());
        }
        for (int v = 0; v < 4; ++v) {
            if (!config.oracle.op_table.count(v)) {
                throw ConfigError("oracle", "op_table is missing an opcode");
            }
        }
    } else {
        try {
            config.oracle.op = block_op_from_name(op_name);
        } catch (const UnsupportedOp& e) {
            throw ConfigError("oracle", e.what());
        }
    }

    if (!j.contains("input_mode") || !j["input_mode"].is_string()) {
        throw ConfigError("input_mode", "required: \"exhaustive\" or \"random\"");
    }
    const std::string imode = j["input_mode"].get<std::string>();
    if (imode == "exhaustive") {
        config.input_mode = InputMode::Exhaustive;
    } else if (imode == "random") {
        config.input_mode = InputMode::Random;
    } else {
        throw ConfigError("input_mode", "must be \"exhaustive\" or \"random\"");
    }

    if (!j.contains("fault_mode") || !j["fault_mode"].is_string()) {
        throw ConfigError("fault_mode", "required: \"exhaustive-single\" or \"random\"");
    }
    const std::string fmode = j["fault_mode"].get<std::string>();
    if (fmode == "exhaustive-single") {
        config.fault_mode = FaultMode::ExhaustiveSingle;
    } else if (fmode == "random") {
        config.fault_mode = FaultMode::Random;
    } else {
        throw ConfigError("fault_mode", "must be \"exhaustive-single\" or \"random\"");
    }

    const auto get_uint = [&](const char* key, std::uint64_t fallback,
                              bool required) -> std::uint64_t {
        if (!j.contains(key)) {
            if (required) throw ConfigError(key, "required integer");
            return fallback;
        }
        if (!j[key].is_number_unsigned() && !j[key].is_number_integer()) {
            throw ConfigError(key, "must be an integer");
        }
        const auto v = j[key].get<std::int64_t>();
        if (v < 0) throw ConfigError(key, "must be non-negative");
        return static_cast<std::uint64_t>(v);
    };
    config.budget = static_cast<int>(
        get_uint("budget", 1, config.fault_mode == FaultMode::Random));
    config.seed = get_uint("seed", 0, false);
    config.trials = get_uint("trials", 0, config.input_mode == InputMode::Random);

    if (j.contains("fault_kinds")) {
        if (!j["fault_kinds"].is_array()) throw ConfigError("fault_kinds", "must be an array");
        config.fault_kinds.clear();
        for (const auto& kv : j["fault_kinds"]) {
            const std::string name = kv.get<std::string>();
            if (name == "transient") {
                config.fault_kinds.push_back(FaultKind::TransientFlip);
            } else if (name == "stuck0") {
                config.fault_kinds.push_back(FaultKind::StuckAt0);
            } else if (name == "stuck1") {
                config.fault_kinds.push_back(FaultKind::StuckAt1);
            } else {
                throw ConfigError("fault_kinds", "unknown kind '" + name + "'");
            }
        }
    }
    if (j.contains("distinct_cones")) {
        if (!j["distinct_cones"].is_boolean()) throw ConfigError("distinct_cones", "must be bool");
        config.distinct_cones = j["distinct_cones"].get<bool>();
    }
    if (j.contains("fault_count")) {
        if (j["fault_count"].is_string() && j["fault_count"] == "uniform") {
            config.uniform_fault_count = true;
        } else if (j["fault_count"].is_number_integer()) {
            if (j["fault_count"].get<int>() != config.budget) {
                throw ConfigError("fault_count", "fixed count must equal budget");
            }
        } else {
            throw ConfigError("fault_count", "must be \"uniform\" or the budget integer");
        }
    }
    if (j.contains("input_errors")) {
        if (!j["input_errors"].is_object()) throw ConfigError("input_errors", "must be an object");
        for (const auto& [key, value] : j["input_errors"].items()) {
            if (key == "weight") {
                config.input_errors.weight = value.get<int>();
            } else if (key == "correct_before") {
                config.input_errors.correct_before = value.get<bool>();
            } else {
                throw ConfigError("input_errors", "unknown entry '" + key + "'");
            }
        }
    }
    if (j.contains("fault_gates")) {
        if (!j["fault_gates"].is_object() || !j["fault_gates"].contains("from") ||
            !j["fault_gates"].contains("to")) {
            throw ConfigError("fault_gates", "must be an object {\"from\": id, \"to\": id}");
        }
        config.fault_gate_range = {j["fault_gates"]["from"].get<int>(),
                                   j["fault_gates"]["to"].get<int>()};
    }
    return config;
}

}  // namespace eccalu
