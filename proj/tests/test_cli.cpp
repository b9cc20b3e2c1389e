#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "turanlab/bounds.hpp"
#include "turanlab/io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = turan::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    const auto name = "turanlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix;
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

// Value of `column` in the first data row of a CSV document.
std::string csv_field(const std::string& csv, const std::string& column) {
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    auto split = [](const std::string& s) {
        std::vector<std::string> v;
        std::string cell;
        std::istringstream ss(s);
        while (std::getline(ss, cell, ',')) v.push_back(cell);
        return v;
    };
    const auto h = split(header), r = split(row);
    for (std::size_t i = 0; i < h.size() && i < r.size(); ++i) {
        if (h[i] == column) return r[i];
    }
    return {};
}

}  // namespace

TEST_CASE("ratio of x - 1 prints 0.5") {
    const auto path = temp_path(".json");
    write_file(path, R"({"leading":[1,0],"zeros":[[1,0]]})");
    auto r = run({"ratio", "--poly", path});
    CHECK(r.code == 0);
    CHECK(csv_field(r.out, "ratio") == "0.5");
    auto j = run({"ratio", "--poly", path, "--format", "json"});
    CHECK(j.code == 0);
    CHECK(turan::io::Json::parse(j.out)["value"] == 0.5);
    std::remove(path.c_str());
}

TEST_CASE("search example") {
    auto r = run({"search", "--n", "1", "--k", "0", "--pin", "--budget", "5000", "--restarts", "8", "--seed", "7"});
    REQUIRE(r.code == 0);
    auto j = turan::io::Json::parse(r.out);
    CHECK(std::abs(j["ratio"].get<double>() - 0.5) <= 1e-6);
}

TEST_CASE("lemma32 example") {
    auto r = run({"lemma32", "--deg", "1", "--zeros", "[[0,0]]", "--alpha", "4"});
    REQUIRE(r.code == 0);
    auto j = turan::io::Json::parse(r.out);
    CHECK(j["measure"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(j["bound"].get<double>() == doctest::Approx(2.828).epsilon(1e-3));
    CHECK(j["satisfied"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"ratio", "--poly", "x.json", "--bogus"}).code == 2);
    CHECK(run({"search", "--n", "1"}).code == 2);
    CHECK(run({"search", "--n", "one", "--k", "0"}).code == 2);
    CHECK(run({"ratio", "--poly", "x.json", "--format", "xml"}).code == 2);
    CHECK(run({"search", "--n", "2", "--k", "0", "--budget", "0"}).code == 2);
}

TEST_CASE("domain errors exit 1 with a diagnostic") {
    auto a = run({"verdict", "--zeros", "[[2,0]]", "--n", "1", "--k", "0"});
    CHECK(a.code == 1);
    CHECK(a.err.find("error:") == 0);
    CHECK(a.err.find('\n') == a.err.size() - 1);

    CHECK(run({"ratio", "--poly", "/nonexistent.json"}).code == 1);
    CHECK(run({"lemma31", "--zeros", "[[0,-0.5]]", "--delta", "1"}).code == 1);
    CHECK(run({"lemma32", "--deg", "2", "--zeros", "[[0,0]]", "--alpha", "4"}).code == 1);
    CHECK(run({"construct", "--family", "thm24", "--n", "4", "--k", "3"}).code == 1);
    CHECK(run({"remark", "--epsilon", "2", "--n", "1"}).code == 1);
    CHECK(run({"search", "--n", "2", "--k", "5"}).code == 1);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("identical arguments give identical output") {
    const std::vector<std::string> args{"sweep", "--n", "2", "3", "--k", "0", "1", "--budget", "300", "--restarts", "2",
                                        "--seed", "4"};
    auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("n,k,ratio,err,lower_bound,upper_construction,within_bracket,restarts_used,evals\n", 0) == 0);
    // Rows ordered by (n, k).
    CHECK(a.out.find("\n2,0,") < a.out.find("\n2,1,"));
    CHECK(a.out.find("\n2,1,") < a.out.find("\n3,0,"));

    auto s1 = run({"sample", "--n", "6", "--k", "2", "--pin", "--seed", "3"});
    auto s2 = run({"sample", "--n", "6", "--k", "2", "--pin", "--seed", "3"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("sample output round-trips through ratio") {
    const auto path = temp_path(".json");
    auto s = run({"sample", "--n", "7", "--k", "3", "--pin", "--seed", "11", "--out", path});
    REQUIRE(s.code == 0);
    auto p = turan::io::read_polynomial(path);
    auto r = run({"ratio", "--poly", path});
    REQUIRE(r.code == 0);
    const double direct = turan::turan_ratio(p).value;
    CHECK(std::stod(csv_field(r.out, "ratio")) == direct);
    std::remove(path.c_str());
}

TEST_CASE("verdict, decay, remark and construct run") {
    auto v = run({"verdict", "--zeros", "[[1,0],[1,0],[-1,0],[-1,0]]", "--n", "4", "--k", "0", "--pin"});
    CHECK(v.code == 0);
    CHECK(v.out.find("turan11") != std::string::npos);

    auto d = run({"decay", "--zeros", "[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]",
                  "--n", "12", "--k", "1"});
    CHECK(d.code == 0);
    CHECK(turan::io::Json::parse(d.out)["status"] == "satisfied");

    auto m = run({"remark", "--epsilon", "0.3", "--n", "5"});
    REQUIRE(m.code == 0);
    auto mj = turan::io::Json::parse(m.out);
    CHECK(mj["m"] == 4);

    const auto dir = temp_path("");
    std::filesystem::create_directories(dir);
    auto c = run({"construct", "--family", "thm24", "--n", "2", "--k", "1", "--budget", "300", "--restarts", "1",
                  "--dump-dir", dir});
    REQUIRE(c.code == 0);
    for (const char* name : {"Q", "R", "P"}) {
        auto p = turan::io::read_polynomial(dir + "/" + name + ".json");
        CHECK(p.degree() >= 2);
    }
    std::filesystem::remove_all(dir);

    auto e = run({"construct", "--family", "turan-odd", "--m", "2", "--format", "csv"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("name,ratio,err,predicted_bound,member\n", 0) == 0);
}

TEST_CASE("--out writes to a file") {
    const auto path = temp_path(".csv");
    auto r = run({"lemma32", "--zeros", "[[0,0]]", "--alpha", "4", "--format", "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().rfind("measure,err,bound,parameter,satisfied\n", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("polynomial input needs exactly one source") {
    CHECK(run({"ratio"}).code == 2);
    CHECK(run({"ratio", "--zeros", "[[1,0]]", "--poly", "p.json"}).code == 2);
    auto r = run({"ratio", "--zeros", "[[1,0]]"});
    CHECK(r.code == 0);
    CHECK(csv_field(r.out, "ratio") == "0.5");
    CHECK(run({"ratio", "--zeros", "[[1,0]", "--deg", "1"}).code == 1);
}
