#include "scspread/alist.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace scspread {

void write_alist(std::ostream& out, const SparseBinaryMatrix& h) {
    const int rows = h.rows();
    const int cols = h.cols();
    std::vector<std::vector<int>> by_col(static_cast<std::size_t>(cols));
    std::vector<std::vector<int>> by_row(static_cast<std::size_t>(rows));
    for (const auto& [r, c] : h.nonzeros()) {
        by_col[static_cast<std::size_t>(c)].push_back(r + 1);
        by_row[static_cast<std::size_t>(r)].push_back(c + 1);
    }
    int max_col = 0, max_row = 0;
    for (const auto& list : by_col) max_col = std::max(max_col, static_cast<int>(list.size()));
    for (const auto& list : by_row) max_row = std::max(max_row, static_cast<int>(list.size()));

    out << cols << " " << rows << "\n";
    out << max_col << " " << max_row << "\n";
    for (int j = 0; j < cols; ++j) out << by_col[static_cast<std::size_t>(j)].size() << (j + 1 < cols ? " " : "");
    out << "\n";
    for (int i = 0; i < rows; ++i) out << by_row[static_cast<std::size_t>(i)].size() << (i + 1 < rows ? " " : "");
    out << "\n";
    for (const auto& list : by_col) {
        for (std::size_t k = 0; k < list.size(); ++k) out << list[k] << (k + 1 < list.size() ? " " : "");
        out << "\n";
    }
    for (const auto& list : by_row) {
        for (std::size_t k = 0; k < list.size(); ++k) out << list[k] << (k + 1 < list.size() ? " " : "");
        out << "\n";
    }
}

void write_alist_file(const std::string& path, const SparseBinaryMatrix& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_alist(out, h);
}

namespace {

long long next_int(std::istream& in, const char* what) {
    long long v;
    if (!(in >> v)) throw std::runtime_error(std::string("alist: missing or malformed ") + what);
    return v;
}

}  // namespace

SparseBinaryMatrix read_alist(std::istream& in) {
    const long long cols = next_int(in, "column count");
    const long long rows = next_int(in, "row count");
    if (cols < 0 || rows < 0 || cols > 10'000'000 || rows > 10'000'000)
        throw std::runtime_error("alist: implausible dimensions");
    next_int(in, "max column degree");
    next_int(in, "max row degree");

    std::vector<int> col_deg(static_cast<std::size_t>(cols));
    for (long long j = 0; j < cols; ++j) {
        const long long d = next_int(in, "column degree");
        if (d < 0 || d > rows) throw std::runtime_error("alist: column degree out of range");
        col_deg[static_cast<std::size_t>(j)] = static_cast<int>(d);
    }
    std::vector<int> row_deg(static_cast<std::size_t>(rows));
    for (long long i = 0; i < rows; ++i) {
        const long long d = next_int(in, "row degree");
        if (d < 0 || d > cols) throw std::runtime_error("alist: row degree out of range");
        row_deg[static_cast<std::size_t>(i)] = static_cast<int>(d);
    }

    // Column neighbor lists define the matrix; zero entries are padding.
    std::vector<SparseBinaryMatrix::Coord> coords;
    for (long long j = 0; j < cols; ++j) {
        int seen = 0;
        // A padded file lists max_col entries per line; an unpadded one lists
        // exactly the degree. Read degree entries, then peek for padding when
        // the degree line may continue with zeros.
        while (seen < col_deg[static_cast<std::size_t>(j)]) {
            const long long r = next_int(in, "column neighbor");
            if (r == 0) continue;  // padding
            if (r < 1 || r > rows) throw std::runtime_error("alist: row index out of range");
            coords.emplace_back(static_cast<int>(r - 1), static_cast<int>(j));
            ++seen;
        }
    }
    // Row lists are redundant; consume and cross-check entry count.
    long long row_entries = 0;
    for (long long i = 0; i < rows; ++i) {
        int seen = 0;
        while (seen < row_deg[static_cast<std::size_t>(i)]) {
            const long long c = next_int(in, "row neighbor");
            if (c == 0) continue;
            if (c < 1 || c > cols) throw std::runtime_error("alist: column index out of range");
            ++seen;
            ++row_entries;
        }
    }
    if (row_entries != static_cast<long long>(coords.size()))
        throw std::runtime_error("alist: row and column lists disagree on nonzero count");

    return SparseBinaryMatrix(static_cast<int>(rows), static_cast<int>(cols), std::move(coords));
}

SparseBinaryMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_alist(in);
}

}  // namespace scspread
