#include "mohaea/harness.hpp"

int main(int argc, char** argv)
{
    return mohaea::cli_dispatch(argc, argv);
}
