#ifndef SWFRONT_OUTPUT_HPP
#define SWFRONT_OUTPUT_HPP

#include <string>
#include <vector>

namespace swfront::output {

// Delimited text table: header row + rows of fixed 17-significant-digit
// floating point values. Identical inputs produce byte-identical files.
class Table {
public:
    explicit Table(std::vector<std::string> columns);
    void add_row(const std::vector<double>& row);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<double>& row(std::size_t i) const { return rows_[i]; }
    void write_csv(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

std::string format_g17(double v);

struct Curve {
    std::string name;
    std::vector<double> x, y;
};

// Minimal deterministic SVG line plot (vector-graphic snapshot files).
void write_svg(const std::string& path, const std::vector<Curve>& curves,
               const std::string& title = "", int width = 640, int height = 400);

} // namespace swfront::output

#endif
