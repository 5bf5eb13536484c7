#include "memdrift/cli/app.hpp"

int main(int argc, char** argv) { return memdrift::cli::run(argc, argv); }
