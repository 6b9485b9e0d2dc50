#include <string>
#include <vector>

#include "cubepack/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cubepack::cli::run(std::move(args));
}
