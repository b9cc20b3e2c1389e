#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/io.hpp"

using namespace turan;
using oracle::C;

TEST_CASE("polynomial JSON round trip is lossless") {
    oracle::Gen gen(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.integer(0, 25);
        auto p = Polynomial::from_zeros(gen.unit_complex(), gen.zeros_in_disk(n, 2.0));
        auto text = io::to_json(p).dump();
        auto q = io::polynomial_from_json(io::Json::parse(text));
        CHECK(q.leading() == p.leading());
        REQUIRE(q.zeros().size() == p.zeros().size());
        for (std::size_t i = 0; i < p.zeros().size(); ++i) CHECK(q.zeros()[i] == p.zeros()[i]);
    }
}

TEST_CASE("polynomial JSON format") {
    auto p = Polynomial::from_zeros(C{2.0, 0.0}, {C{0.0, 1.0}});
    auto j = io::to_json(p);
    CHECK(j.dump() == R"({"leading":[2.0,0.0],"zeros":[[0.0,1.0]]})");
    auto z = io::polynomial_from_json(io::Json::parse(R"({"leading":[0,0],"zeros":[]})"));
    CHECK(z.is_zero());
}

TEST_CASE("malformed polynomial JSON is rejected") {
    for (const char* bad : {R"([1,2])", R"({"leading":[1,0]})", R"({"leading":[1],"zeros":[]})",
                            R"({"leading":[1,0],"zeros":[[1,"x"]]})", R"({"leading":[1,0],"zeros":5})",
                            R"({"leading":[0,0],"zeros":[[1,0]]})"}) {
        CHECK_THROWS_AS(io::polynomial_from_json(io::Json::parse(bad)), Error);
    }
    CHECK_THROWS_AS(io::read_polynomial("/nonexistent/p.json"), InvalidArgument);
}

TEST_CASE("file round trip") {
    const std::string path = (std::filesystem::temp_directory_path() / ("turanlab_io_" + std::to_string(::getpid()) + ".json")).string();
    auto p = Polynomial::from_zeros(C{0.1, 0.2}, {C{1.0 / 3.0, -2.0 / 7.0}, C{1e-300, 5e300}});
    io::write_polynomial(path, p);
    auto q = io::read_polynomial(path);
    CHECK(q.leading() == p.leading());
    CHECK(q.zeros()[0] == p.zeros()[0]);
    CHECK(q.zeros()[1] == p.zeros()[1]);
    std::remove(path.c_str());
}

TEST_CASE("class spec JSON") {
    auto j = io::to_json(ClassSpec(5, 2, true));
    CHECK(j.dump() == R"({"k":2,"n":5,"pin":true})");
    auto s = io::class_spec_from_json(j);
    CHECK(s.n == 5);
    CHECK(s.k == 2);
    CHECK(s.pin_interval_zero);
    CHECK_THROWS_AS(io::class_spec_from_json(io::Json::parse(R"({"n":1,"k":3})")), InvalidArgument);
}

TEST_CASE("doubles print with 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("level set report JSON keys") {
    LevelSetReport r;
    r.measure.value = 0.5;
    r.bound = 2.0;
    r.intervals = {Interval(-0.25, 0.25)};
    auto j = io::to_json(r);
    for (const char* key : {"measure", "err", "bound", "parameter", "satisfied", "intervals"}) CHECK(j.contains(key));
    CHECK(j["intervals"][0][1] == 0.25);
}

TEST_CASE("verdict CSV columns") {
    auto v = evaluate_verdict(Polynomial::from_zeros(1.0, {1.0}), ClassSpec(1, 1, true));
    std::ostringstream os;
    io::write_verdict_csv(os, v);
    const auto s = os.str();
    CHECK(s.rfind("n,k,ratio,err,bound_source,bound_value,pass\n", 0) == 0);
    CHECK(s.find("1,1,0.5,") != std::string::npos);
}
