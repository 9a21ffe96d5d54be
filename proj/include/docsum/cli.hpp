// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace docsum::cli {

// Parses argv and runs one subcommand. Returns the process exit code:
// 0 on success, 1 on a runtime failure (JSON error on stderr), 2 on a
// usage error.
int run(int argc, const char* const* argv);

}  // namespace docsum::cli
