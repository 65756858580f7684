#include "selftest.hpp"

#include <iostream>

int main() {
    const auto summary = bulam::cli::run_selftest();
    bulam::cli::print_summary(summary, std::cout);
    return summary.all_passed() ? 0 : 1;
}
