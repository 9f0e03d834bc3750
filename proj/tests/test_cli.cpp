// End-to-end checks of the command line tool. The binary path is baked in at
// configure time; these tests run it through a shell.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "smdm/analysis.hpp"
#include "smdm/json_io.hpp"
#include "smdm/stream_codec.hpp"

#ifndef SMDM_CLI_PATH
#define SMDM_CLI_PATH ""
#endif

namespace {

namespace fs = std::filesystem;
using namespace smdm;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SMDM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("smdm_cli_test_" + name);
}

void write_file(const fs::path& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

TEST_CASE("fit-mb emits a loadable distribution") {
    const RunResult r = run_cli("fit-mb --support 1,3,5,7 --mb-entropy 1.25");
    REQUIRE(r.exit_code == 0);
    const Distribution d = distribution_from_json(nlohmann::json::parse(r.out));
    CHECK(std::abs(entropy(d) - 1.25) <= 1e-6);

    CHECK(run_cli("fit-mb --support 1,3,5,7 --mb-entropy 2.5").exit_code == 3);
}

TEST_CASE("weights subcommand") {
    const RunResult r = run_cli("weights --weights energy --support 1,3,5,7");
    REQUIRE(r.exit_code == 0);
    const WeightFunction wf = weight_function_from_json(nlohmann::json::parse(r.out));
    CHECK(wf.weights() == std::vector<std::uint32_t>{1, 9, 25, 49});

    const RunResult s = run_cli("weights --weights selfinfo:q=3 --support 1,3 --dist /dev/null");
    CHECK(s.exit_code == 2);  // unreadable distribution spec
}

TEST_CASE("encode/decode round trip matches the library byte for byte") {
    const fs::path input = temp_file("in.bin");
    const fs::path symbols = temp_file("sym.bin");
    const fs::path output = temp_file("out.bin");

    std::mt19937_64 rng(99);
    std::string data(4096, '\0');
    for (char& c : data) c = static_cast<char>(rng() & 0xff);
    write_file(input, data);

    const std::string common = " --support 1,3,5,7 --weights energy -n 13 -m 16 ";
    REQUIRE(run_cli("encode" + common + "--in " + input.string() + " --out " + symbols.string()).exit_code == 0);

    // no re-framing between the tool and the library
    const ShellMapper mapper(13, weights_energy(Alphabet({1, 3, 5, 7})));
    std::istringstream lib_in(data);
    std::ostringstream lib_symbols;
    encode_stream(mapper, 16, lib_in, lib_symbols);
    CHECK(read_file(symbols) == lib_symbols.str());

    REQUIRE(run_cli("decode" + common + "--in " + symbols.string() + " --out " + output.string()).exit_code == 0);
    CHECK(read_file(output) == data);

    fs::remove(input);
    fs::remove(symbols);
    fs::remove(output);
}

TEST_CASE("empty file encodes to an empty file") {
    const fs::path input = temp_file("empty_in");
    const fs::path output = temp_file("empty_out");
    write_file(input, "");
    REQUIRE(run_cli("encode --support 1,3,5,7 --weights energy -n 8 -m 8 --in " + input.string() +
                    " --out " + output.string())
                .exit_code == 0);
    CHECK(read_file(output).empty());
    fs::remove(input);
    fs::remove(output);
}

TEST_CASE("trailing partial block is a data error") {
    const fs::path input = temp_file("partial.bin");
    const fs::path output = temp_file("partial_out.bin");
    write_file(input, std::string(5, 'x'));  // 40 bits, not a multiple of 16
    CHECK(run_cli("encode --support 1,3,5,7 --weights energy -n 13 -m 16 --in " + input.string() +
                  " --out " + output.string())
              .exit_code == 3);
    fs::remove(input);
    fs::remove(output);
}

TEST_CASE("sweep CSV schema and values") {
    const RunResult r =
        run_cli("sweep --n-list 8,16 --rate 1.25 --support 1,3,5,7 --mb-entropy 1.25 --weights energy");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "n,m,rate,D_exact,D_norm_exact,D_approx_wmax,D_approx_wmax_minus_1,D_ccdm,D_ccdm_norm");

    const Distribution target = mb_fit_entropy({1, 3, 5, 7}, 1.25).dist;
    const ShellMapper mapper(8, weights_energy(Alphabet({1, 3, 5, 7})));
    const double want = divergence_exact(mapper, 10, target).divergence_bits;

    const auto row = split_csv(lines[1]);
    REQUIRE(row.size() == 9);
    CHECK(row[0] == "8");
    CHECK(row[1] == "10");
    CHECK(std::abs(std::stod(row[3]) - want) <= 1e-6);
    for (std::size_t i = 3; i < 9; ++i) CHECK(std::stod(row[i]) > 0.0);

    // exact column empties beyond the cap, approximations stay
    const RunResult capped = run_cli(
        "sweep --n-list 8,16 --rate 1.25 --support 1,3,5,7 --mb-entropy 1.25 --weights energy --exact-cap 12");
    const auto capped_row = split_csv(split_lines(capped.out)[2]);
    REQUIRE(capped_row.size() == 9);
    CHECK(capped_row[3].empty());
    CHECK(capped_row[4].empty());
    CHECK(!capped_row[5].empty());
}

TEST_CASE("sweep with a perfect full-rate configuration") {
    const RunResult r = run_cli("sweep --n-list 1 --rate 1 --support 1,3 --mb-v 0 --weights energy");
    REQUIRE(r.exit_code == 0);
    const auto row = split_csv(split_lines(r.out)[1]);
    REQUIRE(row.size() == 9);
    CHECK(std::abs(std::stod(row[3])) <= 1e-12);
}

TEST_CASE("sweep above the alphabet capacity fails per row") {
    const RunResult r =
        run_cli("sweep --n-list 8,16 --rate 2.5 --support 1,3,5,7 --mb-entropy 1.25 --weights energy");
    CHECK(r.exit_code == 2);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    const auto row = split_csv(lines[1]);
    REQUIRE(row.size() == 9);
    for (std::size_t i = 1; i < 9; ++i) CHECK(row[i].empty());
}

TEST_CASE("compare-ccdm matches the analytic baseline") {
    const RunResult r = run_cli("compare-ccdm --n-list 8 --support 1,3,5,7 --mb-entropy 1.25");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,m,rate,D_ccdm,D_ccdm_norm,composition");
    const auto row = split_csv(lines[1]);
    REQUIRE(row.size() == 6);

    const Distribution target = mb_fit_entropy({1, 3, 5, 7}, 1.25).dist;
    const DivergenceReport want = ccdm_divergence(n_type_quantize(target, 8), target);
    CHECK(row[1] == std::to_string(want.m));
    CHECK(std::abs(std::stod(row[3]) - want.divergence_bits) <= 1e-6);
    CHECK(row[5] == "5|2|1|0");
}

TEST_CASE("configuration errors exit with code 2") {
    CHECK(run_cli("sweep --rate 1.25 --support 1,3,5,7 --mb-entropy 1.25").exit_code == 2);  // no --n-list
    CHECK(run_cli("encode --support 1,3,5,7 -n 8 -m 8 --in /nonexistent --out /tmp/x").exit_code == 2);
    CHECK(run_cli("fit-mb --support 1,3,5,7").exit_code == 2);  // missing --mb-entropy
    CHECK(run_cli("no-such-command").exit_code == 2);
}
