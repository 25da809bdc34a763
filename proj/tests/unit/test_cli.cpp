#include "doctest.h"

#include "leftorder/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace leftorder;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return std::string(LEFTORDER_CORPUS_DIR) + "/" + name + ".grp"; }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("leftorder_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(file(name)) << text; }
};

}  // namespace

TEST_CASE("betti prints b1 and the Smith diagonal") {
    const Run r = run({"betti", corpus_file("thurston")});
    CHECK(r.code == 0);
    CHECK(r.out.find("b1 = 0\n") == 0);
    CHECK(r.out.find("snf = [1, 1, 1]") != std::string::npos);
    CHECK(run({"betti", corpus_file("klein")}).out.find("b1 = 1") == 0);
}

TEST_CASE("check-lo emits a certificate") {
    TempDir dir;
    const Run r = run({"check-lo", corpus_file("z2"), "--subset", "a", "--max-len", "2", "--out", dir.file("c.json")});
    CHECK(r.code == 0);
    CHECK(r.err.find("NotLeftOrderable") != std::string::npos);
    CHECK(run({"verify", dir.file("c.json")}).code == 0);
    const Run stdout_run = run({"check-lo", corpus_file("z"), "--subset", "a", "--max-len", "3"});
    CHECK(stdout_run.code == 0);
    CHECK(stdout_run.out.find("\"verdict\": \"Undetermined\"") != std::string::npos);
}

TEST_CASE("realize, germ-order and obstruct write documents that verify") {
    TempDir dir;
    CHECK(run({"realize", corpus_file("z"), "--order", "lex", "--radius", "5", "--iterates", "10", "--out",
               dir.file("r.json")})
              .code == 0);
    CHECK(run({"verify", dir.file("r.json")}).code == 0);

    dir.write("germs.json", R"({"format_version": 1, "germs": [{"name": "f", "expr": "x + s", "rho": 1}]})");
    CHECK(run({"germ-order", dir.file("germs.json"), "--depth", "5", "--max-len", "4", "--out", dir.file("t.json")})
              .code == 0);
    CHECK(run({"verify", dir.file("t.json")}).code == 0);

    dir.write("a.json", R"({"format_version": 1, "germs": [{"name": "a", "expr": "x + s", "rho": 1}]})");
    const Run o = run({"obstruct", corpus_file("z3"), dir.file("a.json"), "--depth", "3", "--out", dir.file("o.json")});
    CHECK(o.code == 0);
    CHECK(o.err.find("NotARepresentation") == 0);
    CHECK(run({"verify", dir.file("o.json")}).code == 0);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"betti", dir.file("missing.grp")}).code == 1);
    dir.write("bad.grp", "gens: a b\nrels: a b^9 x\n");
    const Run parse = run({"betti", dir.file("bad.grp")});
    CHECK(parse.code == 1);
    CHECK(parse.err.find("2:13: undeclared generator `x`") != std::string::npos);
    CHECK(run({"check-lo", corpus_file("z2"), "--subset", "a^2", "--max-len", "2"}).code == 2);
    CHECK(run({"realize", corpus_file("klein"), "--radius", "2", "--out", dir.file("k.json")}).code == 2);
    dir.write("junk.json", "{\"kind\": \"germ_transcript\"}");
    CHECK(run({"verify", dir.file("junk.json")}).code == 3);
    dir.write("ids.json", R"({"format_version": 1, "germs": [{"name": "f", "expr": "x", "rho": 1}]})");
    CHECK(run({"germ-order", dir.file("ids.json"), "--out", dir.file("t.json")}).code == 2);
    CHECK(run({"obstruct", corpus_file("klein"), dir.file("ids.json")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("corpus listing and export") {
    TempDir dir;
    const Run r = run({"corpus", "--write", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("thurston\t") != std::string::npos);
    CHECK(fs::exists(dir.file("tsuboi.grp")));
    CHECK(run({"betti", dir.file("zz.grp")}).out.find("b1 = 2") == 0);
}
