#include <string>
#include <vector>

#include "qcir/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qcir::run_command_line(args);
}
