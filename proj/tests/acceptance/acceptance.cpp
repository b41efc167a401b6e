#define DOCTEST_CONFIG_IMPLEMENT
#include <iostream>

#include "doctest.h"
#include "rmt/validation.hpp"

namespace {

void criterion(int k) {
    const auto r = rmt::run_criterion(k, rmt::Budget::Full);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
    CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}

}  // namespace

TEST_CASE("criterion 1") { criterion(1); }
TEST_CASE("criterion 2") { criterion(2); }
TEST_CASE("criterion 3") { criterion(3); }
TEST_CASE("criterion 4") { criterion(4); }
TEST_CASE("criterion 5") { criterion(5); }
TEST_CASE("criterion 6") { criterion(6); }
TEST_CASE("criterion 7") { criterion(7); }
TEST_CASE("criterion 8") { criterion(8); }
TEST_CASE("criterion 9") { criterion(9); }
TEST_CASE("criterion 10") { criterion(10); }

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.setOption("order-by", "file");
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
