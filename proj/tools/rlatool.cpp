#include "cli.hpp"

int main(int argc, char** argv)
{
    return rla::run_cli(argc, argv);
}
