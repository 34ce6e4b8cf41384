#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eccalu/cli.hpp"
#include "eccalu/faultsim.hpp"
#include "eccalu/tmr.hpp"

using namespace eccalu;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string dir = [] {
    const std::string d = "/tmp/eccalu_cli_test";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}();

}  // namespace

TEST_CASE("build round-trips through the text format") {
    const std::string path = dir + "/nand.nl";
    const CliResult r = cli({"build", "--block", "nand", "--code", "hamming7_4", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find(kToolVersion) != std::string::npos);  // version on stdout

    const Netlist parsed = Netlist::parse(slurp(path));
    const Netlist reference = build_bitwise_block(BlockOp::NAND, CodeSpec::hamming(4), false);
    CHECK(parsed.gate_count() == reference.gate_count());
    CHECK(parsed.serialize() == reference.serialize());
}

TEST_CASE("build tmr has at least 3x the ecc data-path gates") {
    const std::string ecc_path = dir + "/nand_ecc.nl";
    const std::string tmr_path = dir + "/nand_tmr.nl";
    CHECK(cli({"build", "--block", "nand", "--code", "hamming7_4", "--out", ecc_path}).code == 0);
    CHECK(cli({"build", "--block", "nand", "--code", "hamming7_4", "--arch", "tmr", "--out",
               tmr_path}).code == 0);
    const Netlist tmr = Netlist::parse(slurp(tmr_path));
    CHECK(tmr.gate_count() >= 3 * 4);  // 3 copies of the 4-gate raw data path
}

TEST_CASE("build rejects invalid combinations with exit 2") {
    const CliResult r =
        cli({"build", "--block", "add", "--code", "bch15_7", "--out", dir + "/x.nl"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") == 0);

    CHECK(cli({"build", "--block", "nand", "--code", "nosuch", "--out", dir + "/x.nl"}).code == 2);
    CHECK(cli({"build", "--block", "corrector", "--code", "hamming7_4", "--arch", "tmr", "--out",
               dir + "/x.nl"}).code == 2);
    CHECK(cli({"build", "--frob"}).code == 2);  // unknown flag
}

TEST_CASE("verify passes a shipped block and fails a mutated one") {
    const std::string path = dir + "/verify_nand.nl";
    REQUIRE(cli({"build", "--block", "nand", "--code", "hamming7_4", "--out", path}).code == 0);
    const CliResult good =
        cli({"verify", "--netlist", path, "--code", "hamming7_4", "--op", "nand"});
    CHECK(good.code == 0);
    CHECK(good.out.find("OK") != std::string::npos);

    // corrupt one parity-path gate kind: the block still parses but computes
    // a wrong function
    std::string text = slurp(path);
    const auto pos = text.rfind("XOR");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "AND");
    const std::string bad_path = dir + "/verify_nand_bad.nl";
    std::ofstream(bad_path) << text;
    const CliResult bad =
        cli({"verify", "--netlist", bad_path, "--code", "hamming7_4", "--op", "nand"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("VIOLATION") != std::string::npos);
}

TEST_CASE("verify flags single-fault violations with a counterexample") {
    // raw nand under hamming decode never encodes parity: the sweep must fail
    const std::string path = dir + "/raw_nand.nl";
    std::ofstream(path) << build_raw_block(BlockOp::NAND, 4).serialize();
    const CliResult r = cli({"verify", "--netlist", path, "--code", "none", "--op", "nand"});
    CHECK(r.code == 1);  // raw nand: any output-gate fault lands unprotected
    CHECK(r.out.find("counterexample") != std::string::npos);
    CHECK(r.out.find("gate=g") != std::string::npos);
}

TEST_CASE("verify tmr: replicas protected, voters exposed") {
    const std::string path = dir + "/tmr_nand.nl";
    REQUIRE(cli({"build", "--block", "nand", "--code", "hamming7_4", "--arch", "tmr", "--out",
                 path}).code == 0);
    const CliResult replicas = cli({"verify", "--netlist", path, "--code", "none", "--op",
                                    "nand", "--arch", "tmr", "--r", "1"});
    CHECK(replicas.code == 0);
    const CliResult voters = cli({"verify", "--netlist", path, "--code", "none", "--op", "nand",
                                  "--arch", "tmr", "--r", "1", "--include-voter-faults"});
    CHECK(voters.code == 1);
    CHECK(voters.out.find("counterexample") != std::string::npos);
}

TEST_CASE("inject: deterministic byte-identical reports") {
    const std::string nl_path = dir + "/inject_nand.nl";
    REQUIRE(cli({"build", "--block", "nand", "--code", "hamming7_4", "--out", nl_path}).code ==
            0);
    const nlohmann::json config = {{"netlist", "inject_nand.nl"},
                                   {"decode", "hamming7_4"},
                                   {"oracle", {{"op", "nand"}}},
                                   {"input_mode", "random"},
                                   {"fault_mode", "random"},
                                   {"budget", 2},
                                   {"seed", 77},
                                   {"trials", 3000}};
    const std::string cfg_path = dir + "/campaign.json";
    std::ofstream(cfg_path) << config.dump(2);

    const std::string csv1 = dir + "/r1.csv", csv2 = dir + "/r2.csv";
    const std::string json1 = dir + "/r1.json", json2 = dir + "/r2.json";
    CHECK(cli({"inject", "--config", cfg_path, "--report", csv1, "--json", json1}).code == 0);
    CHECK(cli({"inject", "--config", cfg_path, "--report", csv2, "--json", json2, "--threads",
               "4"}).code == 0);
    CHECK(slurp(csv1) == slurp(csv2));  // byte-identical, serial vs parallel
    CHECK(slurp(json1) == slurp(json2));
    CHECK(slurp(csv1).find("outcome,count\n") == 0);

    const auto parsed = nlohmann::json::parse(slurp(json1));
    CHECK(parsed["generator"] == "splitmix64-counter");
    CHECK(parsed["trials"] == 3000);
    CHECK(parsed["config"]["seed"] == 77);
}

TEST_CASE("inject: budget 0 config reports zero silent wrongs") {
    const nlohmann::json config = {{"netlist", "inject_nand.nl"},
                                   {"decode", "hamming7_4"},
                                   {"oracle", {{"op", "nand"}}},
                                   {"input_mode", "random"},
                                   {"fault_mode", "random"},
                                   {"budget", 0},
                                   {"seed", 1},
                                   {"trials", 500}};
    const std::string cfg_path = dir + "/budget0.json";
    std::ofstream(cfg_path) << config.dump();
    const std::string csv = dir + "/budget0.csv";
    CHECK(cli({"inject", "--config", cfg_path, "--report", csv}).code == 0);
    CHECK(slurp(csv).find("silent_wrong,0\n") != std::string::npos);
}

TEST_CASE("inject: exhaustive-single config routes to the sweep runner") {
    const nlohmann::json config = {{"netlist", "inject_nand.nl"},
                                   {"decode", "hamming7_4"},
                                   {"oracle", {{"op", "nand"}}},
                                   {"input_mode", "exhaustive"},
                                   {"fault_mode", "exhaustive-single"},
                                   {"budget", 1},
                                   {"seed", 0},
                                   {"trials", 0}};
    const std::string cfg_path = dir + "/sweep.json";
    std::ofstream(cfg_path) << config.dump();
    const std::string csv = dir + "/sweep.csv";
    const CliResult r = cli({"inject", "--config", cfg_path, "--report", csv});
    CHECK(r.code == 0);
    // 256 inputs x 19 gates x 1 kind, none harmful
    CHECK(slurp(csv).find("trials,4864\n") != std::string::npos);
    CHECK(slurp(csv).find("silent_wrong,0\n") != std::string::npos);

    // mixed modes are rejected
    nlohmann::json mixed = config;
    mixed["fault_mode"] = "random";
    std::ofstream(cfg_path) << mixed.dump();
    CHECK(cli({"inject", "--config", cfg_path}).code == 2);
}

TEST_CASE("inject: schema violation names the key and exits 2") {
    const nlohmann::json config = {{"netlist", "inject_nand.nl"},
                                   {"oracle", {{"op", "nand"}}},
                                   {"input_mode", "random"},
                                   {"fault_mode", "random"},
                                   {"budget", 1},
                                   {"trials", 10},
                                   {"blorp", true}};
    const std::string cfg_path = dir + "/bad.json";
    std::ofstream(cfg_path) << config.dump();
    const CliResult r = cli({"inject", "--config", cfg_path});
    CHECK(r.code == 2);
    CHECK(r.err.find("blorp") != std::string::npos);
}

TEST_CASE("cost prints the 32-bit comparison") {
    const CliResult r = cli({"cost", "--width", "32", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bcp_check_bits") != std::string::npos);
    CHECK(r.out.find("secded_parity_bits        7") != std::string::npos);
    CHECK(r.out.find("bcp_check_bits            6") != std::string::npos);
    CHECK(r.out.find("tmr_redundancy            96") != std::string::npos);
}

TEST_CASE("compare: one corrector unit vs four voters") {
    const CliResult r = cli({"compare", "--block", "nand", "--code", "hamming7_4"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int ecc_units = -1, tmr_units = -1;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::string arch;
        long total, redundant, fsg, fsu;
        if (ls >> arch >> total >> redundant >> fsg >> fsu) {
            if (arch == "ecc") ecc_units = static_cast<int>(fsu);
            if (arch == "tmr") tmr_units = static_cast<int>(fsu);
        }
    }
    CHECK(ecc_units == 1);
    CHECK(tmr_units == 4);
}

TEST_CASE("encode and decode round trip") {
    const CliResult enc = cli({"encode", "--code", "hamming7_4", "--data", "1011"});
    CHECK(enc.code == 0);
    CHECK(enc.out.find("1011010\n") != std::string::npos);

    const CliResult dec = cli({"decode", "--code", "hamming7_4", "--word", "1011010"});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("data 1011\n") != std::string::npos);

    // flip one bit: decode reports the corrected position
    const CliResult fixed = cli({"decode", "--code", "hamming7_4", "--word", "1011011"});
    CHECK(fixed.code == 0);
    CHECK(fixed.out.find("data 1011\n") != std::string::npos);
    CHECK(fixed.out.find("corrected_positions 6\n") != std::string::npos);

    const CliResult rs = cli({"encode", "--code", "rs7_3", "--data", "3,5,1"});
    CHECK(rs.code == 0);

    // extended hamming double error is uncorrectable: exit 1
    const CliResult enc84 = cli({"encode", "--code", "exthamming8_4", "--data", "1011"});
    std::string word = enc84.out.substr(enc84.out.rfind('\n', enc84.out.size() - 2) + 1);
    word.pop_back();  // trailing newline
    word[0] ^= 1;
    word[3] ^= 1;
    const CliResult bad = cli({"decode", "--code", "exthamming8_4", "--word", word});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("uncorrectable") != std::string::npos);
}
