#include "fk3/cli.hpp"

int main(int argc, char** argv) {
    return fk3::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
