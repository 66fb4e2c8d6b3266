#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lieforge/lie_algebra.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

class Sandbox {
public:
    Sandbox() {
        dir_ = fs::temp_directory_path() / ("lieforge_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~Sandbox() { fs::remove_all(dir_); }
    fs::path path(const std::string& name) const { return dir_ / name; }

    Run run(const std::string& args, const std::string& env = "") const {
        std::string cmd = env + " " + std::string(LIEFORGE_CLI) + " " + args + " >" + path("stdout").string() + " 2>" +
                          path("stderr").string();
        int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(path("stdout")), slurp(path("stderr"))};
    }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

private:
    fs::path dir_;
};

json without_timing(json j) {
    j.erase("timing");
    return j;
}

const json& claim(const json& report, const std::string& id) {
    for (const auto& c : report["claims"])
        if (c["id"] == id) return c;
    throw std::runtime_error("missing claim " + id);
}

const char* kSo3 =
    "lie-sc v1 dim=3\n"
    "labels E1_2,e0,e1\n"
    "0 1 2 1\n"
    "0 2 1 -1\n"
    "1 2 0 1\n"
    "B 0 0 1\n"
    "B 1 1 1\n"
    "B 2 2 1\n";

}  // namespace

TEST_CASE("construct writes a file that verifies and round-trips byte for byte") {
    Sandbox box;
    Run r = box.run("construct cp2 --out " + box.path("cp2.sc").string() + " --report -");
    REQUIRE(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["command"] == "construct");
    CHECK(claim(rep, "shape")["witness"]["dim"] == 8);
    CHECK(claim(rep, "c_negative")["status"] == "pass");

    std::string first = slurp(box.path("cp2.sc"));
    CHECK(lieforge::write_structure_constants(lieforge::parse_structure_constants(first)) == first);

    Run v = box.run("verify " + box.path("cp2.sc").string() + " --full --report -");
    CHECK(v.code == 0);
    CHECK(claim(json::parse(v.out), "jacobi")["witness"]["mode"] == "full");
}

TEST_CASE("reports are deterministic apart from timing") {
    Sandbox box;
    Run a = box.run("construct e6 --out " + box.path("a.sc").string() + " --seed 7 --samples 500 --report -");
    Run b = box.run("construct e6 --out " + box.path("a.sc").string() + " --seed 7 --samples 500 --report -");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    json ja = json::parse(a.out);
    CHECK(ja["seed"] == 7);
    CHECK(without_timing(ja) == without_timing(json::parse(b.out)));
    CHECK(claim(ja, "c_negative")["witness"]["c"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("a corrupted so(3) file fails verification with a witness triple") {
    Sandbox box;
    box.write("good.sc", kSo3);
    CHECK(box.run("verify " + box.path("good.sc").string() + " --full").code == 0);

    // [e0, e1] picks up an extra e0 component
    box.write("bad.sc", std::string(kSo3) + "1 2 1 1\n");
    Run r = box.run("verify " + box.path("bad.sc").string() + " --full --report -");
    CHECK(r.code == 1);
    json rep = json::parse(r.out);
    const json& j = claim(rep, "jacobi");
    CHECK(j["status"] == "fail");
    CHECK(j["witness"]["triple"].size() == 3);
}

TEST_CASE("malformed input exits 2 and names the line") {
    Sandbox box;
    box.write("broken.sc", "lie-sc v1 dim=3\nlabels a,b,c\n0 1 2 x\n");
    Run r = box.run("verify " + box.path("broken.sc").string());
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    CHECK(box.run("").code == 2);
    CHECK(box.run("construct nosuchthing --out " + box.path("x.sc").string()).code == 2);
    CHECK(box.run("decompose Q3 spin").code == 2);
    CHECK(box.run("decompose B2 spin --what everything").code == 2);
    CHECK(box.run("table 9.9").code == 2);
}

TEST_CASE("scan reports the real case n = 7 as infeasible") {
    Sandbox box;
    Run r = box.run("scan 7 7 --report -");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    const json& c = claim(rep, "classification");
    CHECK(c["witness"]["feasible"].empty());
    CHECK(c["witness"]["cases"][0]["feasible"] == false);
    CHECK(c["witness"]["cases"][0]["kind"] == "real");
}

TEST_CASE("decompose examples") {
    Sandbox box;
    Run r = box.run("decompose D8 halfspin+ --power 2 --what full --report -");
    REQUIRE(r.code == 0);
    json w = claim(json::parse(r.out), "decomposition")["witness"];
    CHECK(w["dim"] == 8128);
    CHECK(w["summand_count"] == 2);
    CHECK(w["summands"][0]["highest_weight"] == "(1,1,1,1,1,1,0,0)");

    r = box.run("decompose B4 spin --power 4 --what trivial-mult --report -");
    REQUIRE(r.code == 0);
    CHECK(claim(json::parse(r.out), "decomposition")["witness"]["trivial_multiplicity"] == 0);

    r = box.run("decompose D5 halfspin+ --power 2 --what norm2 --report -");
    REQUIRE(r.code == 0);
    CHECK(claim(json::parse(r.out), "decomposition")["witness"]["norm2"] == 1);
}

TEST_CASE("memory budget exits 3") {
    Sandbox box;
    Run r = box.run("decompose D8 halfspin+ --power 4 --what trivial-mult", "LIEFORGE_MAX_MEM_MB=1");
    CHECK(r.code == 3);
    CHECK(r.err.find("MemoryBudgetExceeded") != std::string::npos);
}

TEST_CASE("report file mode prints one status line per claim") {
    Sandbox box;
    Run r = box.run("table 3.5 --report " + box.path("t.json").string());
    CHECK(r.code == 0);
    json rep = json::parse(slurp(box.path("t.json")));
    CHECK(rep["claims"].size() == 6);
    CHECK(r.out.find("SKIP 3.5 E IX") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
