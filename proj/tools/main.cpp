// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "secmimo/cli.hpp"

int main(int argc, char** argv) {
  return secmimo::cli::run(argc, argv, std::cout, std::cerr);
}
