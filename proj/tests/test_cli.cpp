#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "process.hpp"

using testing_support::run;

namespace {

const std::string kCli = TRINOM_VERIFY_PATH;
const std::string kFaulty = TRINOM_VERIFY_FAULTY_PATH;

}  // namespace

TEST_CASE("all-pass sweep exits 0") {
    auto r = run(kCli + " --pmin 5 --pmax 7 --nmax 1 --claims Thm1_Eq2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(R"("claim":"Thm1_Eq2","p":7,"n":1,"k":null,"modulus":49,"lhs":"43","rhs":"43","pass":true)") !=
          std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run(kCli + " --pmin 6 --pmax 5 2>/dev/null").exit_code == 2);
    CHECK(run(kCli + " --claims NoSuchClaim 2>/dev/null").exit_code == 2);
    CHECK(run(kCli + " --format xml 2>/dev/null").exit_code == 2);
    CHECK(run(kCli + " --bogus 2>/dev/null").exit_code == 2);
    CHECK(run(kCli + " --pmin 5 --pmax 7 --out /nonexistent-dir/x.jsonl 2>/dev/null").exit_code == 2);
    // the fault flag only exists in the test build
    CHECK(run(kCli + " --inject-fault Thm1_Eq2 2>/dev/null").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run(kCli + " --help").exit_code == 0);
}

TEST_CASE("injected fault exits 1") {
    auto r = run(kFaulty + " --pmin 5 --pmax 11 --nmax 1 --claims Thm1_Eq2,Thm2_Eq6 --inject-fault Thm1_Eq2");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find(R"("pass":false)") != std::string::npos);
    // the test build without a fault behaves like the real one
    CHECK(run(kFaulty + " --pmin 5 --pmax 11 --nmax 1").exit_code == 0);
}

TEST_CASE("output is byte-identical across runs and job counts") {
    const std::string args = " --pmin 5 --pmax 61 --nmax 2 --format csv";
    auto a = run(kCli + args + " --jobs 1");
    auto b = run(kCli + args + " --jobs 4");
    auto c = run(kCli + args + " --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "trinom_cli_test_out.jsonl";
    auto to_file = run(kCli + " --pmin 5 --pmax 13 --nmax 1 --out " + path);
    auto to_stdout = run(kCli + " --pmin 5 --pmax 13 --nmax 1");
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == to_stdout.out);
    std::remove(path.c_str());
}
