#include "strandbox/cli.hpp"

int main(int argc, char** argv) { return strandbox::run(argc, argv); }
