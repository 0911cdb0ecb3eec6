#include <string>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
    return toric::run(std::vector<std::string>(argv + 1, argv + argc));
}
