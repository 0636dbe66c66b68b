#include "hf/csv.hpp"

#include <charconv>
#include <cstring>

namespace hf {

CsvReader::CsvReader(const std::string& path) : buf_(1 << 16) {
    f_ = std::fopen(path.c_str(), "rb");
    if (!f_) throw DataError("cannot open file: " + path);
}

CsvReader::~CsvReader() {
    if (f_) std::fclose(f_);
}

bool CsvReader::fill() {
    len_ = std::fread(buf_.data(), 1, buf_.size(), f_);
    pos_ = 0;
    return len_ > 0;
}

bool CsvReader::next(std::vector<std::string_view>& fields) {
    line_.clear();
    while (true) {
        if (pos_ >= len_ && !fill()) break;
        const char* start = buf_.data() + pos_;
        const char* nl = static_cast<const char*>(std::memchr(start, '\n', len_ - pos_));
        if (nl) {
            line_.append(start, nl - start);
            pos_ += static_cast<size_t>(nl - start) + 1;
            if (!line_.empty() && line_.back() == '\r') line_.pop_back();
            ++line_no_;
            if (line_.empty()) continue;
            fields = split_view(line_, ',');
            return true;
        }
        line_.append(start, len_ - pos_);
        pos_ = len_;
    }
    if (!line_.empty()) {
        if (line_.back() == '\r') line_.pop_back();
        ++line_no_;
        fields = split_view(line_, ',');
        return true;
    }
    return false;
}

CsvWriter::CsvWriter(const std::string& path) {
    f_ = std::fopen(path.c_str(), "wb");
    if (!f_) throw DataError("cannot open file for writing: " + path);
    buf_.reserve(1 << 16);
}

CsvWriter::~CsvWriter() { close(); }

void CsvWriter::flush_buf() {
    if (!buf_.empty() && f_) {
        std::fwrite(buf_.data(), 1, buf_.size(), f_);
        buf_.clear();
    }
}

void CsvWriter::raw_line(std::string_view s) {
    buf_.append(s);
    buf_.push_back('\n');
    if (buf_.size() > (1 << 16)) flush_buf();
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) buf_.push_back(',');
        buf_.append(fields[i]);
    }
    buf_.push_back('\n');
    if (buf_.size() > (1 << 16)) flush_buf();
}

void CsvWriter::close() {
    flush_buf();
    if (f_) {
        std::fclose(f_);
        f_ = nullptr;
    }
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace hf
