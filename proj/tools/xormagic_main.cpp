#include <vector>

#include "xormagic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return xormagic::cli_dispatch(args);
}
