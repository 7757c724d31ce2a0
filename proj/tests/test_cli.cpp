#include <doctest.h>
int* cspec_test_cli_unused;
