#include "wythoff/cli.hpp"

int main(int argc, char** argv) {
    return wythoff::run_cli(argc, argv);
}
