#pragma once

#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hf/common.hpp"

namespace hf {

// Line-oriented CSV reader. No quoting support: none of the pipeline's file
// formats embed commas in fields.
class CsvReader {
  public:
    explicit CsvReader(const std::string& path);
    ~CsvReader();
    CsvReader(const CsvReader&) = delete;
    CsvReader& operator=(const CsvReader&) = delete;

    // Reads the next non-empty line into an internal buffer and splits it.
    // Returned views are valid until the next call.
    bool next(std::vector<std::string_view>& fields);
    const std::string& line() const { return line_; }
    long long line_number() const { return line_no_; }

  private:
    std::FILE* f_ = nullptr;
    std::string line_;
    long long line_no_ = 0;
    std::vector<char> buf_;
    size_t pos_ = 0, len_ = 0;
    bool fill();
};

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void raw_line(std::string_view s);
    void row(const std::vector<std::string>& fields);
    void close();

  private:
    std::FILE* f_ = nullptr;
    std::string buf_;
    void flush_buf();
};

std::string format_double(double v); // shortest round-trip representation

} // namespace hf
