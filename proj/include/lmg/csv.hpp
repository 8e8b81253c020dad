#pragma once

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace lmg {

/// Locale-independent float formatting: shortest-of-17-significant-digit
/// decimal, '.' separator, so identical values always print identically.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Line-buffered CSV emitter with a fixed header. Rows are written in
/// call order; callers are responsible for canonical ordering.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out_ << ',';
            out_ << columns[i];
        }
        out_ << '\n';
    }

    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((write_field(fields, first), first = false), ...);
        out_ << '\n';
    }

    void flush() { out_.flush(); }

private:
    void write_field(double v, bool first) {
        if (!first) out_ << ',';
        out_ << format_double(v);
    }
    void write_field(int v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }
    void write_field(long v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }
    void write_field(std::size_t v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }
    void write_field(std::string_view v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }
    void write_field(const std::string& v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }
    void write_field(const char* v, bool first) {
        if (!first) out_ << ',';
        out_ << v;
    }

    std::ofstream out_;
};

}  // namespace lmg
