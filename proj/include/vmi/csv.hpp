#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace vmi {

// Locale-independent number-to-text conversion (shortest round-trip form,
// always '.' as the decimal separator).
std::string format_number(double value);
std::string format_number(long long value);

// Minimal CSV emitter: one schema comment line, one header row, then data.
// All writes go through format_number, so identical inputs produce
// byte-identical files on any platform.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& schema_name,
              const std::vector<std::string>& columns);

    void begin_row();
    void add(double value);
    void add(long long value);
    void add(int value) { add(static_cast<long long>(value)); }
    void add(const std::string& text);
    void end_row();

    void flush();

private:
    std::ofstream out_;
    std::string path_;
    std::size_t column_count_;
    std::size_t cells_in_row_ = 0;
    bool in_row_ = false;
};

} // namespace vmi
