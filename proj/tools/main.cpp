#include "commands.hpp"

int main(int argc, char** argv) {
    return drg::cli::run(argc, argv);
}
