// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/cli.hpp"

int main(int argc, char** argv) {
    return docsum::cli::run(argc, argv);
}
