// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace docsum {

using ojson = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes to "<path>.tmp" and renames into place; the temporary is removed
// if anything throws, so a failed write never leaves a partial file.
class AtomicFileWriter {
public:
    explicit AtomicFileWriter(std::filesystem::path path);
    ~AtomicFileWriter();
    AtomicFileWriter(const AtomicFileWriter&) = delete;
    AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

    void write(std::string_view data);
    void commit();

private:
    std::filesystem::path path_;
    std::filesystem::path tmp_;
    std::FILE* file_ = nullptr;
    bool committed_ = false;
};

// Serializes one JSON value per line. Invalid UTF-8 surfaces as IoError.
std::string dump_line(const ojson& value);

void write_text_file(const std::filesystem::path& path, std::string_view data);
std::string read_text_file(const std::filesystem::path& path);

// Calls fn(json, line_number) for every non-blank line. Malformed JSON throws
// IoError naming the 1-based line number.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const ojson&, std::size_t)>& fn);

std::string file_sha256_hex(const std::filesystem::path& path);

}  // namespace docsum
