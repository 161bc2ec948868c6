#include "qnil/acceptance.hpp"

#include <iostream>

int main() {
    qnil::AcceptanceOptions opt;
    bool all = true;
    qnil::run_acceptance(opt, [&](const qnil::CriterionResult& r) {
        std::cout << qnil::format_result(r) << std::endl;
        all = all && r.passed;
    });
    std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria failed") << std::endl;
    return all ? 0 : 1;
}
