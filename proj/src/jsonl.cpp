// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "docsum/hash.hpp"

namespace docsum {

namespace fs = std::filesystem;

AtomicFileWriter::AtomicFileWriter(fs::path path) : path_(std::move(path)) {
    tmp_ = path_;
    tmp_ += ".tmp";
    if (path_.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path_.parent_path(), ec);
    }
    file_ = std::fopen(tmp_.c_str(), "wb");
    if (file_ == nullptr) throw IoError("cannot open " + tmp_.string() + " for writing");
}

AtomicFileWriter::~AtomicFileWriter() {
    if (file_ != nullptr) std::fclose(file_);
    if (!committed_) {
        std::error_code ec;
        fs::remove(tmp_, ec);
    }
}

void AtomicFileWriter::write(std::string_view data) {
    if (data.empty()) return;
    if (std::fwrite(data.data(), 1, data.size(), file_) != data.size()) {
        throw IoError("write failed: " + tmp_.string());
    }
}

void AtomicFileWriter::commit() {
    if (std::fflush(file_) != 0 || std::fclose(file_) != 0) {
        file_ = nullptr;
        throw IoError("flush failed: " + tmp_.string());
    }
    file_ = nullptr;
    std::error_code ec;
    fs::rename(tmp_, path_, ec);
    if (ec) throw IoError("rename " + tmp_.string() + " -> " + path_.string() + ": " + ec.message());
    committed_ = true;
}

std::string dump_line(const ojson& value) {
    try {
        return value.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
    } catch (const nlohmann::json::type_error& e) {
        throw IoError(std::string("cannot serialize record: ") + e.what());
    }
}

void write_text_file(const fs::path& path, std::string_view data) {
    AtomicFileWriter out(path);
    out.write(data);
    out.commit();
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return ss.str();
}

void for_each_jsonl(const fs::path& path, const std::function<void(const ojson&, std::size_t)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        ojson value;
        try {
            value = ojson::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw IoError(path.string() + ": line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
        }
        fn(value, line_no);
    }
    if (in.bad()) throw IoError("read failed: " + path.string());
}

std::string file_sha256_hex(const fs::path& path) { return to_hex(sha256(read_text_file(path))); }

}  // namespace docsum
