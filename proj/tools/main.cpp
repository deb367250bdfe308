#include "hypang_cli.hpp"

int main(int argc, char** argv)
{
    return hypang::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
