// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <iostream>

#include "mkp/acceptance.hpp"

int main() { return mkp::run_acceptance(std::cout) ? 0 : 1; }
