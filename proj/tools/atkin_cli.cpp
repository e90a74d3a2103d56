#include "cli.hpp"

int main(int argc, char **argv)
{
    return atkin::cli::run(argc, argv);
}
