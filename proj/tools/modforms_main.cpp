#include "modforms/cli.hpp"

int main(int argc, char** argv) { return mf::cli::dispatch(argc, argv); }
