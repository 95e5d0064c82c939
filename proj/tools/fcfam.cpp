#include "fc/cli.hpp"

int main(int argc, char** argv) {
    return fc::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
