#include "mlcore/cli.hpp"

int main(int argc, char** argv) { return mlcore::cli::run(argc, argv); }
