// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace docsum {

using Digest256 = std::array<std::uint8_t, 32>;

Digest256 sha256(std::string_view data);
std::string to_hex(const Digest256& digest);

// First eight digest bytes read big-endian.
std::uint64_t digest_prefix64(const Digest256& digest);

inline std::uint64_t hash64(std::string_view data) { return digest_prefix64(sha256(data)); }

}  // namespace docsum
