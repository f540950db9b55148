#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef DCAS_CLI_PATH
#error "DCAS_CLI_PATH must point at the dcas binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DCAS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dcas_cli_" + std::to_string(getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

const char* kCovering =
    "objects: x1 x2 x3 x4\n"
    "element C1: x1 x4\n"
    "element C2: x1 x2 x4\n"
    "element C3: x3 x4\n";

const char* kBatch =
    "add-objects: x5 x6\n"
    "extend C1: x5\n"
    "extend C2: x5\n"
    "new C4: x3 x5 x6\n"
    "new C5: x1 x6\n";

} // namespace

TEST_CASE("build then approx round") {
    TempDir dir;
    write_file(dir.file("cov.txt"), kCovering);

    auto built = run("build " + dir.file("cov.txt") + " --out " + dir.file("s.dcas"));
    REQUIRE_MESSAGE(built.exit_code == 0, built.output);
    CHECK(built.output.find("n: 4") != std::string::npos);
    CHECK(built.output.find("m: 3") != std::string::npos);

    auto approx = run("approx " + dir.file("s.dcas") + " --set x3,x4 --op sh");
    REQUIRE_MESSAGE(approx.exit_code == 0, approx.output);
    CHECK(approx.output == "SH: {x1,x2,x3,x4}\n");

    auto sl = run("approx " + dir.file("s.dcas") + " --set x3,x4 --op sl --vector");
    REQUIRE(sl.exit_code == 0);
    CHECK(sl.output.find("SL: {x3}") != std::string::npos);
    CHECK(sl.output.find("SL-vector: 0010") != std::string::npos);

    auto all = run("approx " + dir.file("s.dcas") + " --set x3,x4");
    REQUIRE(all.exit_code == 0);
    for (const char* tag : {"SH:", "SL:", "XH:", "XL:", "IH:", "IL:"})
        CHECK(all.output.find(tag) != std::string::npos);

    // the fifth pair comes from the set oracle
    CHECK(all.output.find("IL: {x3,x4}") != std::string::npos);
}

TEST_CASE("set from file and json output") {
    TempDir dir;
    write_file(dir.file("cov.txt"), kCovering);
    write_file(dir.file("set.txt"), "x3\nx4\n");
    REQUIRE(run("build " + dir.file("cov.txt") + " --out " + dir.file("s.dcas"))
                .exit_code == 0);

    auto res = run("--json approx " + dir.file("s.dcas") + " --set @" +
                   dir.file("set.txt") + " --op sl --vector");
    REQUIRE_MESSAGE(res.exit_code == 0, res.output);
    json j = json::parse(res.output);
    CHECK(j["SL"]["members"] == json::array({"x3"}));
    CHECK(j["SL"]["vector"] == "0010");
}

TEST_CASE("update and verify") {
    TempDir dir;
    write_file(dir.file("cov.txt"), kCovering);
    write_file(dir.file("batch.txt"), kBatch);
    REQUIRE(run("build " + dir.file("cov.txt") + " --out " + dir.file("s.dcas"))
                .exit_code == 0);

    auto upd = run("update " + dir.file("s.dcas") + " " + dir.file("batch.txt") +
                   " --out " + dir.file("s2.dcas") + " --strict");
    REQUIRE_MESSAGE(upd.exit_code == 0, upd.output);
    CHECK(upd.output.find("t: 2") != std::string::npos);
    CHECK(upd.output.find("l: 2") != std::string::npos);
    CHECK(upd.output.find("delta-ops:") != std::string::npos);

    auto appr = run("approx " + dir.file("s2.dcas") + " --set x3,x4,x5 --op xh");
    REQUIRE(appr.exit_code == 0);
    CHECK(appr.output == "XH: {x2,x3,x4,x5}\n");

    auto sl = run("approx " + dir.file("s2.dcas") + " --set x3,x4,x5 --op sl");
    REQUIRE(sl.exit_code == 0);
    CHECK(sl.output == "SL: {}\n");

    auto ver = run("verify " + dir.file("s2.dcas"));
    REQUIRE_MESSAGE(ver.exit_code == 0, ver.output);
    CHECK(ver.output.find("FAIL") == std::string::npos);

    auto jver = run("--json verify " + dir.file("s2.dcas"));
    REQUIRE(jver.exit_code == 0);
    json j = json::parse(jver.output);
    CHECK(j["ok"] == true);
    CHECK(j["checks"].size() == 5);
}

TEST_CASE("user errors exit with 1") {
    TempDir dir;
    write_file(dir.file("cov.txt"), kCovering);
    REQUIRE(run("build " + dir.file("cov.txt") + " --out " + dir.file("s.dcas"))
                .exit_code == 0);

    // missing file
    CHECK(run("build " + dir.file("nope.txt") + " --out " + dir.file("o.dcas"))
              .exit_code == 1);

    // covering that fails validation
    write_file(dir.file("bad.txt"), "objects: x1 x2\nelement C1: x1\n");
    auto bad = run("build " + dir.file("bad.txt") + " --out " + dir.file("o.dcas"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("x2") != std::string::npos);

    // unknown object in the query set
    auto unknown = run("approx " + dir.file("s.dcas") + " --set zz");
    CHECK(unknown.exit_code == 1);

    // batch touching an old object
    write_file(dir.file("batch.txt"), "add-objects: x5\nextend C1: x1\nnew C4: x5\n");
    auto upd = run("update " + dir.file("s.dcas") + " " + dir.file("batch.txt") +
                   " --out " + dir.file("o.dcas"));
    CHECK(upd.exit_code == 1);

    // strict mode rejects a t = 1 batch that plain mode accepts
    write_file(dir.file("b1.txt"), "add-objects: x5\nnew C4: x4 x5\n");
    CHECK(run("update " + dir.file("s.dcas") + " " + dir.file("b1.txt") +
              " --out " + dir.file("o.dcas"))
              .exit_code == 0);
    CHECK(run("update " + dir.file("s.dcas") + " " + dir.file("b1.txt") +
              " --out " + dir.file("o2.dcas") + " --strict")
              .exit_code == 1);
}

TEST_CASE("corrupted state file") {
    TempDir dir;
    write_file(dir.file("cov.txt"), kCovering);
    REQUIRE(run("build " + dir.file("cov.txt") + " --out " + dir.file("s.dcas"))
                .exit_code == 0);

    // flip one bit inside the gamma payload
    std::ifstream in(dir.file("s.dcas"), std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    in.close();
    bytes[bytes.size() - 2 * 4 * 8] ^= 0x02;
    std::ofstream out(dir.file("c.dcas"), std::ios::binary);
    out << bytes;
    out.close();

    // untrusting load refuses it; trusting load lets verify report the rot
    CHECK(run("approx " + dir.file("c.dcas") + " --set x1").exit_code == 1);
    CHECK(run("approx " + dir.file("c.dcas") + " --set x1 --trust --op ih")
              .exit_code == 0);
    auto ver = run("verify " + dir.file("c.dcas"));
    CHECK(ver.exit_code == 1);
    CHECK(ver.output.find("FAIL") != std::string::npos);
    CHECK(ver.output.find("entry (") != std::string::npos);
}

TEST_CASE("bench") {
    TempDir dir;
    auto res = run("bench --n 80 --m 10 --t 3 --l 2 --batches 2 --seed 9 --csv " +
                   dir.file("out.csv"));
    REQUIRE_MESSAGE(res.exit_code == 0, res.output);
    for (const char* tag :
         {"NCS-total-ops:", "ICS-total-ops:", "NCX-total-ops:", "ICX-total-ops:",
          "ICS/NCS-ratio:", "ICX/NCX-ratio:"})
        CHECK(res.output.find(tag) != std::string::npos);

    std::ifstream csv(dir.file("out.csv"));
    std::string header;
    REQUIRE(std::getline(csv, header));
    CHECK(header == "algo,n,m,t,l,phase,ops,nanos");

    // same seed, same deterministic columns
    auto res2 = run("bench --n 80 --m 10 --t 3 --l 2 --batches 2 --seed 9 --csv " +
                    dir.file("out2.csv"));
    REQUIRE(res2.exit_code == 0);
    auto strip_nanos = [](const std::string& path) {
        std::ifstream in(path);
        std::string all, line;
        while (std::getline(in, line))
            all += line.substr(0, line.rfind(',')) + "\n";
        return all;
    };
    CHECK(strip_nanos(dir.file("out.csv")) == strip_nanos(dir.file("out2.csv")));

    auto jres = run("--json bench --n 40 --m 8 --seed 3");
    REQUIRE(jres.exit_code == 0);
    json j = json::parse(jres.output);
    CHECK(j["total_ops"]["NCS"].get<std::uint64_t>() > 0);
    CHECK(j["ics_ncs_ratio"].get<double>() > 0.0);
}
