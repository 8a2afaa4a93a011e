#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncolor/cli.hpp"

using namespace ncolor;

namespace {

struct Result
{
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("count")
{
    CHECK(call({"count", "--scheme", "even", "--n", "5"}).out == "28\n");
    CHECK(call({"count", "--scheme", "odd", "--n", "5"}).out == "37\n");
    CHECK(call({"count", "--scheme", "mk", "--m", "3", "--k", "0", "--n", "4"}).out ==
          call({"count", "--scheme", "mk", "--m", "3", "--k", "3", "--n", "4"}).out);
    CHECK(call({"count", "--scheme", "choose2", "--n", "4"}).out == "7\n");
    CHECK(call({"count", "--scheme", "restrict", "--lo", "2", "--d", "0", "--n", "5"}).out == "28\n");

    auto j = nlohmann::json::parse(call({"count", "--scheme", "even", "--n", "5", "--format", "json"}).out);
    CHECK(j["count"] == 28);
    CHECK(j["n"] == 5);
}

TEST_CASE("count errors are domain errors")
{
    CHECK(call({"count", "--scheme", "even", "--n", "0"}).status == cli::kDomainError);
    CHECK(call({"count", "--scheme", "mk", "--n", "3"}).status == cli::kDomainError);
    CHECK(call({"count", "--scheme", "restrict", "--lo", "1", "--d", "0", "--n", "3"}).status ==
          cli::kDomainError);
    CHECK(call({"count", "--scheme", "nope", "--n", "3"}).status == cli::kDomainError);
    CHECK(call({"frobnicate"}).status == cli::kDomainError);
    auto r = call({"count", "--scheme", "even", "--n", "-2"});
    CHECK(r.status == cli::kDomainError);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("enumerate")
{
    auto r = call({"enumerate", "--scheme", "even", "--n", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "1+1_1+1\n1+2_1\n1+2_2\n2+1_1\n3\n");
    auto j = call({"enumerate", "--scheme", "choose2", "--n", "3", "--format", "json"});
    std::istringstream lines(j.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto doc = nlohmann::json::parse(line);
        CHECK(doc["total"] == 3);
        ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("series")
{
    auto r = call({"series", "--scheme", "even", "--terms", "6"});
    CHECK(r.status == 0);
    CHECK(r.out.find("F(x) = (x - x^2 + x^3) / (1 - 3x + 2x^2 - x^3)") != std::string::npos);
    CHECK(r.out.find("1 2 5 12 28 65") != std::string::npos);
    auto s = call({"series", "--scheme", "restrict", "--lo", "2", "--d", "0", "--terms", "6"});
    CHECK(s.status == 0);
    CHECK(s.out.find("1 2 5 12 28 65") != std::string::npos);
}

TEST_CASE("map goldens")
{
    CHECK(call({"map", "--bijection", "color2", "--input", "3_3+1_1+6_4+4_4"}).out ==
          "1+2_2+1+6_4+2+2_2\n");
    CHECK(call({"map", "--bijection", "color2", "--direction", "rev", "--input", "1+2_2+1+6_4+2+2_2"})
              .out == "3_3+1_1+6_4+4_4\n");
    CHECK(call({"map", "--bijection", "choose2", "--input", "3_3+4_1+6_5+3_1"}).out ==
          "7_{3,4}+10_{5,7}\n");
    CHECK(call({"map", "--bijection", "choose2", "--direction", "rev", "--input", "7_{3,4}+10_{5,7}"})
              .out == "3_3+4_1+6_5+3_1\n");
    CHECK(call({"map", "--bijection", "choose2", "--direction", "rev", "--plain", "--input",
                "7_{3,4}+10_{5,7}"})
              .out == "3_3+4+6_5+3\n");
    CHECK(call({"map", "--bijection", "ternary", "--input", "1+2_2+1+6_4+4"}).out ==
          "00200002221111\n");
    CHECK(call({"map", "--bijection", "binary", "--direction", "rev", "--input", "1101111110000"})
              .out == "1+2_i+1+6_j+4 where 1<=i<=2 and 1<=j<=6\nmultiplicity 12\n");
    CHECK(call({"map", "--bijection", "perm", "--input", "1,2,6,7,3,4,5,8,9,10,12,13,11"}).out ==
          "3+4_2+4+2_2\n");
    CHECK(call({"map", "--bijection", "perm", "--direction", "rev", "--input", "3+4_2+4+2_2"}).out ==
          "(1,2,6,7,3,4,5,8,9,10,12,13,11)\n");
    CHECK(call({"map", "--bijection", "peel", "--input", "1+2_2+1"}).out == "removed (2,1) 2_2+1\n");
    CHECK(call({"map", "--bijection", "peel", "--direction", "rev", "--branch", "removed", "--input",
                "2_2+1"})
              .out == "1+2_2+1\n");
}

TEST_CASE("map errors")
{
    auto r = call({"map", "--bijection", "ternary", "--direction", "rev", "--input", "0012"});
    CHECK(r.status == cli::kDomainError);
    CHECK(r.err.find("index 1") != std::string::npos);
    CHECK(call({"map", "--bijection", "perm", "--input", "3,2,1"}).status == cli::kDomainError);
    CHECK(call({"map", "--bijection", "color2", "--input", "2_2"}).status == cli::kDomainError);
    CHECK(call({"map", "--bijection", "color2", "--input", "3_"}).status == cli::kDomainError);
    CHECK(call({"map", "--bijection", "peel", "--m", "2", "--k", "1", "--input", "1_1"}).status ==
          cli::kDomainError);
    CHECK(call({"map", "--bijection", "peel", "--direction", "rev", "--input", "2"}).status ==
          cli::kDomainError);
}

TEST_CASE("verify and oeis")
{
    auto v = call({"verify", "--suite", "parser", "--max-n", "6"});
    CHECK(v.status == 0);
    CHECK(v.out.find("0 failed") != std::string::npos);
    CHECK(call({"verify", "--suite", "nope"}).status == cli::kDomainError);

    auto o = call({"oeis", "--id", "A034943", "--offline"});
    CHECK(o.status == 0);
    CHECK(o.out.find("shift 2") != std::string::npos);
    CHECK(o.out.find("PASS") != std::string::npos);
    CHECK(call({"oeis", "--id", "A000000", "--offline"}).status == cli::kDomainError);
    CHECK(call({"oeis", "--id", "A034943", "--offline", "--scheme", "odd"}).status ==
          cli::kVerificationFailed);
}

TEST_CASE("tiling and output files")
{
    CHECK(call({"tiling", "--input", "3_1"}).out == "|[*][ ][ ]|\n");
    CHECK(call({"tiling", "--input", "2+1_1", "--spot-convention"}).out == "|[*][ ]|[*]|\n");

    auto path = std::filesystem::temp_directory_path() / "ncolor-cli-test.txt";
    CHECK(call({"count", "--scheme", "odd", "--n", "3", "--output", path.string()}).out.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), {});
    CHECK(content == "7\n");
    std::filesystem::remove(path);
}
