#include "bowforge/acceptance.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    bowforge::AcceptanceOptions opts;
    for (int k = 1; k < argc; ++k)
        opts.ids.push_back(argv[k]);
    bool ok = true;
    for (const auto& r : bowforge::run_acceptance(opts)) {
        std::cout << bowforge::format_result(r) << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
