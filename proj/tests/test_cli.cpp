#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace ccset;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("ccset_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

RunResult run(const std::string& args) {
    const fs::path out_path = work_dir() / "stdout.txt";
    const fs::path err_path = work_dir() / "stderr.txt";
    const std::string cmd = std::string(CCSET_CLI_PATH) + " " + args + " > " + out_path.string() +
                            " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

const std::string seed_path = std::string(CCSET_DATA_DIR) + "/example1_seed.txt";
const std::string szccs_path = std::string(CCSET_DATA_DIR) + "/example1_szccs.txt";

}  // namespace

TEST_CASE("gen perfect emits the smallest matrix") {
    const RunResult r = run("gen perfect --m 2 --s 1 --x 0");
    REQUIRE(r.exit_code == 0);
    const CodeSetDocument doc = parse_document(r.out);
    REQUIRE(doc.kind == "code");
    REQUIRE(doc.codes[0].phases() == std::vector<int>{0, 0, 0, 1});
    REQUIRE(doc.verdicts.size() == 1);
    REQUIRE(doc.verdicts[0]["property"] == "perfect_array");
    REQUIRE(doc.verdicts[0]["passed"] == true);
}

TEST_CASE("gen ccc-mult rejects non-coprime parameters with exit 2") {
    const RunResult r = run("gen ccc-mult --m 4 --s 2");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("gcd") != std::string::npos);
    REQUIRE(r.out.empty());
}

TEST_CASE("gen requires the per-construction parameters") {
    REQUIRE(run("gen perfect --m 2").exit_code == 2);
    REQUIRE(run("gen extend --seed example1").exit_code == 2);
    REQUIRE(run("gen szccs --p 2").exit_code == 2);
    REQUIRE(run("gen nonsense --m 2 --s 1").exit_code == 2);
}

TEST_CASE("gen szccs from the bundled seed reproduces the golden bundle") {
    const RunResult r = run("gen szccs --seed example1 --p 2 --mos example1 --perms example1");
    REQUIRE(r.exit_code == 0);
    const CodeSetDocument doc = parse_document(r.out);
    REQUIRE(doc.kind == "szccs_bundle");
    REQUIRE(doc.sets == 2);
    REQUIRE(doc.zone == 2);
    REQUIRE(doc.as_set() == fixtures::example1_szccs_codes());
    REQUIRE(doc.verdicts.size() == 2);  // szccs and mccc
    for (const auto& v : doc.verdicts) REQUIRE(v["passed"] == true);
}

TEST_CASE("gen szccs in sign-text format matches the golden file bytes") {
    const RunResult r =
        run("gen szccs --seed example1 --p 2 --mos example1 --perms example1 --format txt");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == slurp(szccs_path));
}

TEST_CASE("gen extend builds a verified length-extended set from a seed file") {
    const RunResult r = run("gen extend --seed " + seed_path + " --p 2 --mos example1");
    REQUIRE(r.exit_code == 0);
    const CodeSetDocument doc = parse_document(r.out);
    REQUIRE(doc.kind == "code_set");
    REQUIRE(doc.k() == 4);
    REQUIRE(doc.n() == 6);
    REQUIRE(doc.verdicts[0]["property"] == "ccc");
    REQUIRE(doc.verdicts[0]["passed"] == true);
}

TEST_CASE("gen szccs rejects colliding permutations with exit 3") {
    const RunResult r =
        run("gen szccs --seed example1 --p 2 --mos example1 --perms \"1,2,3,4;1,2,3,4\"");
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.err.find("column-disjointness") != std::string::npos);
}

TEST_CASE("gen rejects a seed that is not a CCC with exit 3") {
    const fs::path bad = work_dir() / "flat_seed.txt";
    spit(bad, "++\n++\n\n++\n++\n");
    const RunResult r = run("gen extend --seed " + bad.string() + " --p 2 --mos dft");
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.err.find("CCC") != std::string::npos);
}

TEST_CASE("gen refuses sign text for non-binary alphabets") {
    const RunResult r = run("gen extend --seed example1 --p 4 --mos dft --format txt");
    REQUIRE(r.exit_code == 2);
}

TEST_CASE("verify the bundled seed as a CCC") {
    const RunResult r = run("verify " + seed_path + " --property ccc");
    REQUIRE(r.exit_code == 0);
    const auto verdict = nlohmann::json::parse(r.out);
    REQUIRE(verdict["passed"] == true);
    REQUIRE(verdict["parameters"]["k"] == 4);
    // the bundled name works anywhere a document path does
    REQUIRE(run("verify example1 --property ccc").exit_code == 0);
}

TEST_CASE("verify the golden bundle as an szccs and as an mccc") {
    const fs::path bundle = work_dir() / "bundle.json";
    REQUIRE(run("gen szccs --seed example1 --p 2 --mos example1 --perms example1 --out " +
                bundle.string())
                .exit_code == 0);

    const RunResult szccs = run("verify " + bundle.string() + " --property szccs");
    REQUIRE(szccs.exit_code == 0);
    const auto verdict = nlohmann::json::parse(szccs.out);
    REQUIRE(verdict["parameters"]["z"] == 2);
    REQUIRE(verdict["parameters"]["optimal"] == true);

    REQUIRE(run("verify " + bundle.string() + " --property szccs --z 3").exit_code == 1);
    REQUIRE(run("verify " + bundle.string() + " --property mccc").exit_code == 0);  // default z = 3
    REQUIRE(run("verify " + bundle.string() + " --property mccc --z 4").exit_code == 1);
    REQUIRE(run("verify " + seed_path + " --property mccc").exit_code == 2);  // not a bundle
}

TEST_CASE("verify reports failures through the exit code") {
    const fs::path flat = work_dir() / "flat.txt";
    spit(flat, "++\n++\n");
    const RunResult r = run("verify " + flat.string() + " --property perfect");
    REQUIRE(r.exit_code == 1);
    const auto verdict = nlohmann::json::parse(r.out);
    REQUIRE(verdict["passed"] == false);
    REQUIRE(verdict["violations"].size() >= 1);
}

TEST_CASE("verify propagates parse and parameter errors as exit 2") {
    REQUIRE(run("verify " + work_dir().string() + "/does_not_exist.txt --property ccc").exit_code == 2);
    REQUIRE(run("verify " + seed_path + " --property nonsense").exit_code == 2);
    const fs::path garbled = work_dir() / "garbled.json";
    spit(garbled, "{broken");
    REQUIRE(run("verify " + garbled.string() + " --property ccc").exit_code == 2);
    // szccs on a plain code set needs an explicit zone
    REQUIRE(run("verify " + seed_path + " --property szccs").exit_code == 2);
    REQUIRE(run("verify " + seed_path + " --property szccs --z 2").exit_code == 0);
}

TEST_CASE("corr pacf emits one nonzero row for a perfect array") {
    const fs::path doc = work_dir() / "perfect3.json";
    REQUIRE(run("gen perfect --m 3 --s 1 --x 0 --out " + doc.string()).exit_code == 0);
    const RunResult r = run("corr " + doc.string() + " --mode pacf");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    REQUIRE(line == "tau1,tau2,re,im,abs");
    int rows = 0, nonzero = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (std::stod(line.substr(line.rfind(',') + 1)) > 1e-9 * 9) {
            ++nonzero;
            REQUIRE(line == "0,0,9,0,9");
        }
    }
    REQUIRE(rows == 9);
    REQUIRE(nonzero == 1);
}

TEST_CASE("corr accf between two bundled seed codes stays below tolerance") {
    const RunResult r = run("corr " + seed_path + " --mode accf --b-index 1");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        REQUIRE(std::stod(line.substr(line.rfind(',') + 1)) < 1e-9 * 12);
        ++rows;
    }
    REQUIRE(rows == 5);
}

TEST_CASE("corr accf of a code with itself peaks at MN") {
    const RunResult r = run("corr " + seed_path + " --mode accf");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\n0,12,0,12\n") != std::string::npos);
}

TEST_CASE("corr rejects mismatched dimensions and bad indices") {
    REQUIRE(run("corr " + seed_path + " " + szccs_path + " --mode accf").exit_code == 2);
    REQUIRE(run("corr " + seed_path + " --mode accf --a-index 9").exit_code == 2);
}

TEST_CASE("info summarizes a bundle") {
    const fs::path bundle = work_dir() / "bundle_info.json";
    REQUIRE(run("gen szccs --seed example1 --p 2 --mos example1 --perms example1 --out " +
                bundle.string())
                .exit_code == 0);
    const RunResult r = run("info " + bundle.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("kind: szccs_bundle") != std::string::npos);
    REQUIRE(r.out.find("sets: 2") != std::string::npos);
    REQUIRE(r.out.find("measured symmetric zone: 2") != std::string::npos);
}
