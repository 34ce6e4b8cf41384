#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "eccalu/faultsim.hpp"
#include "eccalu/tmr.hpp"

using namespace eccalu;

namespace {

CampaignConfig hamming_block_config(BlockOp op) {
    CampaignConfig config;
    const CodeSpec code = CodeSpec::hamming(4);
    Netlist net;
    switch (op) {
        case BlockOp::XOR: net = build_xor_block(code); break;
        case BlockOp::ADD: net = build_hamming_adder(code, 4); break;
        default: net = build_bitwise_block(op, code, false); break;
    }
    config.netlist = std::make_shared<Netlist>(std::move(net));
    config.decode = code;
    config.oracle.op = op;
    return config;
}

}  // namespace

TEST_CASE("classify") {
    const std::vector<std::uint8_t> golden{1, 0, 1};
    const std::vector<std::uint8_t> same{1, 0, 1};
    const std::vector<std::uint8_t> differs{1, 1, 1};
    const std::vector<std::uint16_t> oracle{1, 0};

    CHECK(classify(same, golden, std::vector<std::uint16_t>{1, 0}, oracle) ==
          TrialOutcome::Masked);
    // masked takes priority even over a decode that disagrees
    CHECK(classify(same, golden, std::nullopt, oracle) == TrialOutcome::Masked);
    CHECK(classify(differs, golden, std::vector<std::uint16_t>{1, 0}, oracle) ==
          TrialOutcome::Corrected);
    CHECK(classify(differs, golden, std::vector<std::uint16_t>{0, 0}, oracle) ==
          TrialOutcome::SilentWrong);
    CHECK(classify(differs, golden, std::nullopt, oracle) ==
          TrialOutcome::DetectedUncorrectable);
}

TEST_CASE("xor block: exhaustive single-transient sweep is perfectly clean") {
    const CampaignConfig config = hamming_block_config(BlockOp::XOR);
    const CampaignReport report = run_exhaustive_single_fault(config);
    CHECK(report.trials == 256ull * 7 * 1);
    CHECK(report.silent_wrong == 0);
    CHECK(report.detected_uncorrectable == 0);
    CHECK(report.corrected + report.masked == report.trials);
    CHECK(report.generator == std::string(kGeneratorName));
}

TEST_CASE("nand block sweep including stuck-at faults") {
    CampaignConfig config = hamming_block_config(BlockOp::NAND);
    config.fault_kinds = {FaultKind::TransientFlip, FaultKind::StuckAt0, FaultKind::StuckAt1};
    const CampaignReport report = run_exhaustive_single_fault(config);
    CHECK(report.trials == 256ull * config.netlist->gate_count() * 3);
    CHECK(report.silent_wrong == 0);
    CHECK(report.detected_uncorrectable == 0);
    CHECK(report.masked > 0);  // stuck-at faults that match the true value
}

TEST_CASE("tmr voter gates produce silent wrong results") {
    const Netlist base = build_raw_block(BlockOp::NAND, 4);
    CampaignConfig config;
    config.netlist = std::make_shared<Netlist>(build_tmr(base, 1));
    config.oracle.op = BlockOp::NAND;
    const int replica_gates = 3 * base.gate_count();

    // replica faults only: everything is masked by the voters
    config.fault_gate_range = {0, replica_gates};
    const CampaignReport inner = run_exhaustive_single_fault(config);
    CHECK(inner.silent_wrong == 0);
    CHECK(inner.masked == inner.trials);

    // voter faults: the unprotected final stage shows through
    config.fault_gate_range = {replica_gates, config.netlist->gate_count()};
    const CampaignReport voters = run_exhaustive_single_fault(config);
    CHECK(voters.silent_wrong > 0);
}

TEST_CASE("budget 0 random campaign never goes wrong") {
    CampaignConfig config = hamming_block_config(BlockOp::AND);
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 2000;
    config.seed = 42;
    config.budget = 0;
    const CampaignReport report = run_random_campaign(config);
    CHECK(report.trials == 2000);
    CHECK(report.silent_wrong == 0);
    CHECK(report.detected_uncorrectable == 0);
    CHECK(report.masked + report.corrected == report.trials);
}

TEST_CASE("bch nand: 2 distinct-cone faults stay correctable, 3 break through") {
    const CodeSpec code = CodeSpec::bch(gf16(), 2);
    CampaignConfig config;
    config.netlist = std::make_shared<Netlist>(build_bch_bitwise_block(BlockOp::NAND, code));
    config.decode = code;
    config.oracle.op = BlockOp::NAND;
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 10000;
    config.seed = 1234;
    config.distinct_cones = true;

    config.budget = 2;
    const CampaignReport two = run_random_campaign(config);
    CHECK(two.trials == 10000);
    CHECK(two.silent_wrong == 0);
    CHECK(two.detected_uncorrectable == 0);

    config.budget = 3;
    const CampaignReport three = run_random_campaign(config);
    CHECK(three.silent_wrong + three.detected_uncorrectable > 0);
}

TEST_CASE("determinism: same config, same report; serial equals parallel") {
    CampaignConfig config = hamming_block_config(BlockOp::NOR);
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 5000;
    config.seed = 99;
    config.budget = 1;
    const CampaignReport r1 = run_random_campaign(config, 1);
    const CampaignReport r2 = run_random_campaign(config, 1);
    const CampaignReport r4 = run_random_campaign(config, 4);
    CHECK(r1 == r2);
    CHECK(r1 == r4);
    CHECK(r1.to_csv() == r2.to_csv());
    CHECK(r1.to_csv() == r4.to_csv());
}

TEST_CASE("a different seed genuinely changes outcomes") {
    CampaignConfig config = hamming_block_config(BlockOp::NAND);
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 4000;
    config.budget = 3;  // beyond the radius: per-gate breakdowns are seed-sensitive
    config.seed = 99;
    const CampaignReport r1 = run_random_campaign(config, 1);
    config.seed = 100;
    const CampaignReport r2 = run_random_campaign(config, 1);
    CHECK(!(r1 == r2));
}

TEST_CASE("report merge is associative across trial ranges") {
    CampaignConfig config = hamming_block_config(BlockOp::OR);
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 3000;
    config.seed = 7;
    config.budget = 1;
    const CampaignReport whole = run_random_campaign(config, 1);

    CampaignReport left = run_trial_range(config, 0, 1000);
    const CampaignReport mid = run_trial_range(config, 1000, 2222);
    const CampaignReport right = run_trial_range(config, 2222, 3000);

    CampaignReport a = left;
    a.merge(mid);
    a.merge(right);
    CampaignReport bc = mid;
    bc.merge(right);
    CampaignReport b = left;
    b.merge(bc);
    CHECK(a == b);
    CHECK(a == whole);
}

TEST_CASE("report counters are consistent") {
    CampaignConfig config = hamming_block_config(BlockOp::NAND);
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 4000;
    config.seed = 5;
    config.budget = 3;  // beyond the hamming radius: some trials go wrong
    const CampaignReport report = run_random_campaign(config);
    CHECK(report.corrected + report.masked + report.silent_wrong +
              report.detected_uncorrectable ==
          report.trials);
    std::uint64_t by_gate = 0;
    for (const auto& [gate, cnt] : report.silent_wrong_by_gate) by_gate += cnt;
    CHECK(by_gate == report.silent_wrong);
    CHECK(report.silent_wrong > 0);
}

TEST_CASE("input errors consume the budget; an ideal input corrector restores it") {
    const CodeSpec code = CodeSpec::bch(gf16(), 2);
    CampaignConfig config;
    config.netlist = std::make_shared<Netlist>(build_bch_bitwise_block(BlockOp::XOR, code));
    config.decode = code;
    config.oracle.op = BlockOp::XOR;
    config.input_mode = InputMode::Random;
    config.fault_mode = FaultMode::Random;
    config.trials = 4000;
    config.seed = 11;
    config.distinct_cones = true;

    // XOR passes operand errors straight through: w=2 plus g=1 exceeds t=2
    config.budget = 1;
    config.input_errors = {2, false};
    const CampaignReport uncorrected = run_random_campaign(config);
    CHECK(uncorrected.silent_wrong + uncorrected.detected_uncorrectable > 0);

    // with the operands corrected first, g <= t keeps every trial clean
    config.input_errors = {2, true};
    const CampaignReport corrected = run_random_campaign(config);
    CHECK(corrected.silent_wrong == 0);
    CHECK(corrected.detected_uncorrectable == 0);
}

TEST_CASE("csv format is exact") {
    CampaignReport report;
    report.record(TrialOutcome::Corrected, 0);
    report.record(TrialOutcome::Masked, 1);
    report.record(TrialOutcome::Masked, 1);
    CHECK(report.to_csv() ==
          "outcome,count\n"
          "corrected,1\n"
          "masked,2\n"
          "silent_wrong,0\n"
          "detected_uncorrectable,0\n"
          "trials,3\n");
}

TEST_CASE("exhaustive sweep enforces the input-space bound") {
    CampaignConfig config;
    config.netlist = std::make_shared<Netlist>(build_raw_block(BlockOp::AND, 16));
    config.oracle.op = BlockOp::AND;  // 32 enumerated bits: too many
    CHECK_THROWS_AS(run_exhaustive_single_fault(config), BoundExceeded);
}

TEST_CASE("config json parsing and validation") {
    // write a tiny netlist to disk for the loader
    const Netlist net = build_bitwise_block(BlockOp::NAND, CodeSpec::hamming(4), false);
    const std::string dir = "/tmp/eccalu_faultsim_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir + "/nand.nl");
        out << net.serialize();
    }
    nlohmann::json j = {{"netlist", "nand.nl"},
                        {"decode", "hamming7_4"},
                        {"oracle", {{"op", "nand"}}},
                        {"input_mode", "random"},
                        {"fault_mode", "random"},
                        {"budget", 1},
                        {"seed", 3},
                        {"trials", 100}};
    const CampaignConfig config = parse_campaign_config(j, dir);
    CHECK(config.trials == 100);
    CHECK(config.decode->name() == "hamming7_4");
    const CampaignReport report = run_random_campaign(config);
    CHECK(report.trials == 100);

    nlohmann::json bad = j;
    bad["frobnicate"] = 1;
    CHECK_THROWS_WITH_AS(parse_campaign_config(bad, dir),
                         "config key 'frobnicate': unknown key", ConfigError);

    bad = j;
    bad.erase("netlist");
    CHECK_THROWS_AS(parse_campaign_config(bad, dir), ConfigError);

    bad = j;
    bad["budget"] = "lots";
    CHECK_THROWS_AS(parse_campaign_config(bad, dir), ConfigError);

    bad = j;
    bad["oracle"] = {{"op", "frob"}};
    CHECK_THROWS_AS(parse_campaign_config(bad, dir), ConfigError);

    // echo of the parsed config lands in the report
    const CampaignReport echoed = run_random_campaign(config);
    CHECK(echoed.config_echo["netlist"] == "nand.nl");
    CHECK(echoed.config_echo["seed"] == 3);
}
