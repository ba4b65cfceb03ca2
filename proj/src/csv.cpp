#include "vmi/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "vmi/errors.hpp"

namespace vmi {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_number(long long value) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema_name,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), path_(path), column_count_(columns.size()) {
    if (!out_) throw IoError("cannot open output file: " + path);
    out_ << "# schema " << schema_name << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::begin_row() {
    if (in_row_) throw std::logic_error("csv row already open");
    in_row_ = true;
    cells_in_row_ = 0;
}

void CsvWriter::add(double value) { add(format_number(value)); }

void CsvWriter::add(long long value) { add(format_number(value)); }

void CsvWriter::add(const std::string& text) {
    if (!in_row_) throw std::logic_error("csv cell outside a row");
    if (cells_in_row_) out_ << ',';
    out_ << text;
    ++cells_in_row_;
}

void CsvWriter::end_row() {
    if (!in_row_) throw std::logic_error("csv row not open");
    if (cells_in_row_ != column_count_)
        throw std::logic_error("csv row width does not match the header");
    out_ << '\n';
    in_row_ = false;
    if (!out_) throw IoError("write failed: " + path_);
}

void CsvWriter::flush() {
    out_.flush();
    if (!out_) throw IoError("write failed: " + path_);
}

} // namespace vmi
