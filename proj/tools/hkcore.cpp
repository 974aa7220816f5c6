#include <hkcore/cli.hpp>

int main(int argc, char** argv) { return hkcore::cli::run(argc, argv); }
