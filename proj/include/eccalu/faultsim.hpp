#ifndef ECCALU_FAULTSIM_HPP
#define ECCALU_FAULTSIM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eccalu/blocks.hpp"
#include "eccalu/codec.hpp"
#include "eccalu/netlist.hpp"

namespace eccalu {

enum class TrialOutcome { Corrected, Masked, SilentWrong, DetectedUncorrectable };

const char* trial_outcome_name(TrialOutcome o);

// Counter-based pseudo-random stream: splitmix64 keyed by (seed, trial
// index), so parallel and serial executions see identical trials. The
// generator name is embedded in every report.
inline constexpr const char* kGeneratorName = "splitmix64-counter";

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(seed ^ ((trial + 0x632BE59BD9B4E019ull) * 0x9E3779B97F4A7C15ull)) {
        next();
    }
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

enum class InputMode { Exhaustive, Random };
enum class FaultMode { ExhaustiveSingle, Random };

struct OracleSpec {
    bool is_alu = false;
    BlockOp op = BlockOp::NAND;       // when !is_alu
    std::map<int, BlockOp> op_table;  // when is_alu
};

// Operand corruption before the netlist runs: `weight` unit flips spread
// over the two operand words; with correct_before the operands are decoded
// and re-encoded first (an ideal input corrector in software).
struct InputErrorSpec {
    int weight = 0;
    bool correct_before = false;
};

struct CampaignConfig {
    std::shared_ptr<const Netlist> netlist;
    std::string netlist_label = "<inline>";
    std::optional<CodeSpec> decode;  // nullopt = raw output comparison (TMR)
    OracleSpec oracle;

    InputMode input_mode = InputMode::Exhaustive;
    std::uint64_t trials = 0;  // random input mode
    std::uint64_t seed = 0;

    FaultMode fault_mode = FaultMode::ExhaustiveSingle;
    std::vector<FaultKind> fault_kinds = {FaultKind::TransientFlip};
    int budget = 1;                    // max simultaneous faults
    bool uniform_fault_count = false;  // #faults ~ U{0..budget} instead of = budget
    bool distinct_cones = false;       // faults constrained to disjoint output cones
    std::optional<std::pair<int, int>> fault_gate_range;  // half-open id range

    InputErrorSpec input_errors;
};

struct CampaignReport {
    std::uint64_t corrected = 0;
    std::uint64_t masked = 0;
    std::uint64_t silent_wrong = 0;
    std::uint64_t detected_uncorrectable = 0;
    std::uint64_t trials = 0;
    std::string generator = kGeneratorName;
    // Each SilentWrong trial is attributed to the lowest injected gate id
    // (-1 when no fault was injected), so the breakdown sums to the total.
    std::map<int, std::uint64_t> silent_wrong_by_gate;
    nlohmann::json config_echo;

    std::uint64_t count(TrialOutcome o) const;
    void record(TrialOutcome o, int gate_for_silent_wrong);
    void merge(const CampaignReport& other);

    std::string to_csv() const;  // header "outcome,count", four rows + trials
    nlohmann::json to_json() const;

    bool operator==(const CampaignReport& other) const {
        return corrected == other.corrected && masked == other.masked &&
               silent_wrong == other.silent_wrong &&
               detected_uncorrectable == other.detected_uncorrectable &&
               trials == other.trials && silent_wrong_by_gate == other.silent_wrong_by_gate;
    }
};

TrialOutcome classify(std::span<const std::uint8_t> raw_faulty,
                      std::span<const std::uint8_t> raw_golden,
                      const std::optional<std::vector<std::uint16_t>>& decoded_data,
                      const std::vector<std::uint16_t>& oracle_data);

// Every input assignment x every allowed gate x every enabled fault kind.
// Requires exhaustive input mode within the 2^20 bound.
CampaignReport run_exhaustive_single_fault(const CampaignConfig& config, int threads = 1);

// `trials` pseudo-random trials; identical config => bit-identical report.
CampaignReport run_random_campaign(const CampaignConfig& config, int threads = 1);

// Partial run over the half-open trial index range; partial reports merge
// associatively to the full report.
CampaignReport run_trial_range(const CampaignConfig& config, std::uint64_t lo, std::uint64_t hi);

// Total trial count implied by the config.
std::uint64_t campaign_trial_count(const CampaignConfig& config);

nlohmann::json campaign_config_to_json(const CampaignConfig& config);

// Parses the CLI JSON schema; file paths resolve relative to config_dir.
// Throws ConfigError naming the offending key.
CampaignConfig parse_campaign_config(const nlohmann::json& j, const std::string& config_dir);

}  // namespace eccalu

#endif
