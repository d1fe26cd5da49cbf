#include "rla/acceptance.hpp"

#include <iostream>

int main()
{
    rla::AcceptanceOptions opt;
    opt.tool_path = RLATOOL_PATH;
    bool all = true;
    for (const auto& r : rla::run_acceptance(opt)) {
        std::cout << rla::format_result(r) << std::endl;
        all = all && r.pass();
    }
    std::cout << (all ? "all acceptance criteria pass" : "some acceptance criteria fail") << std::endl;
    return all ? 0 : 1;
}
