#include "momest/cli.hpp"

int main(int argc, char** argv) {
    return momest::run_cli(argc, argv);
}
