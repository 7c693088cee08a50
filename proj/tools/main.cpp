#include "bargmann/cli.hpp"

int main(int argc, char** argv) { return bargmann::run(argc, argv); }
