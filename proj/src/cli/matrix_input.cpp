#include "gwa/cli/matrix_input.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>

namespace gwa::cli {

namespace {

struct Token {
    int value = 0;
    int line = 1;
    int column = 1;
};

struct Row {
    std::vector<Token> cells;
    int line = 1;
    int column = 1;
};

struct Scanned {
    std::vector<Row> rows;
    std::optional<Row> d;
};

// Splits `text` into rows at ';' and '\n'. A row starting with "d:" is the
// symmetrizer. Blank rows are skipped.
Scanned scan(const std::string& text)
{
    Scanned out;
    Row cur;
    bool cur_is_d = false;
    bool row_started = false;
    int line = 1;
    int col = 1;
    auto flush = [&] {
        if (row_started) {
            if (cur_is_d) {
                if (out.d) {
                    throw InputError(cur.line, cur.column, "second d: line");
                }
                out.d = cur;
            } else {
                if (out.d) {
                    throw InputError(cur.line, cur.column, "matrix row after the d: line");
                }
                out.rows.push_back(cur);
            }
        }
        cur = Row{};
        cur_is_d = false;
        row_started = false;
    };
    std::size_t p = 0;
    while (p < text.size()) {
        const char ch = text[p];
        if (ch == '\n' || ch == ';') {
            flush();
            ++p;
            if (ch == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++p;
            ++col;
            continue;
        }
        if (!row_started) {
            row_started = true;
            cur.line = line;
            cur.column = col;
            if (text.compare(p, 2, "d:") == 0) {
                cur_is_d = true;
                p += 2;
                col += 2;
                continue;
            }
        }
        const std::size_t start = p;
        if (ch == '-' || ch == '+') {
            ++p;
        }
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            ++p;
        }
        std::size_t end = p;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ';') {
            ++end;
        }
        const std::string word = text.substr(start, end - start);
        int value = 0;
        const char* first = word.data() + (word[0] == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(first, word.data() + word.size(), value);
        if (ec == std::errc::result_out_of_range) {
            throw InputError(line, col, "integer out of range: '" + word + "'");
        }
        if (ec != std::errc() || ptr != word.data() + word.size()) {
            throw InputError(line, col, "expected an integer, found '" + word + "'");
        }
        cur.cells.push_back({value, line, col});
        col += static_cast<int>(end - start);
        p = end;
    }
    flush();
    return out;
}

const Token& cell_at(const std::vector<Row>& rows, int i, int j)
{
    return rows[static_cast<std::size_t>(i)].cells[static_cast<std::size_t>(j)];
}

MatrixInput finish(const std::vector<Row>& rows, const std::optional<Row>& d_row, int end_line)
{
    if (rows.empty()) {
        throw InputError(end_line, 1, "no matrix rows");
    }
    const auto n = rows.size();
    for (const auto& r : rows) {
        if (r.cells.size() != n) {
            throw InputError(r.line, r.column,
                             "row has " + std::to_string(r.cells.size()) + " entries, expected " + std::to_string(n));
        }
    }
    IntMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i].cells[j].value;
        }
    }
    MatrixInput out;
    try {
        out.matrix = validate_gcm(m);
    } catch (const CartanError& e) {
        // The message names a 1-based (i,j); point at that entry.
        static const std::regex where(R"(\((\d+),(\d+)\))");
        std::smatch mt;
        const std::string msg = e.what();
        if (std::regex_search(msg, mt, where)) {
            const auto& t = cell_at(rows, std::stoi(mt[1]) - 1, std::stoi(mt[2]) - 1);
            throw InputError(t.line, t.column, msg);
        }
        throw InputError(rows.front().line, rows.front().column, msg);
    }
    if (d_row) {
        if (d_row->cells.size() != n) {
            throw InputError(d_row->line, d_row->column,
                             "d: has " + std::to_string(d_row->cells.size()) + " entries, expected " + std::to_string(n));
        }
        std::vector<int> d;
        for (const auto& t : d_row->cells) {
            d.push_back(t.value);
        }
        try {
            check_symmetrizer(out.matrix, d);
        } catch (const CartanError& e) {
            throw InputError(d_row->line, d_row->column, e.what());
        }
        out.d = d;
    }
    return out;
}

int count_lines(const std::string& text)
{
    return 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

MatrixInput parse_matrix(const std::string& text)
{
    const auto s = scan(text);
    return finish(s.rows, s.d, count_lines(text));
}

MatrixInput parse_matrix_file(const std::string& text)
{
    auto s = scan(text);
    if (s.rows.empty()) {
        throw InputError(count_lines(text), 1, "missing dimension line");
    }
    const Row head = s.rows.front();
    if (head.cells.size() != 1) {
        throw InputError(head.line, head.column, "first line must hold the dimension n alone");
    }
    const int n = head.cells.front().value;
    if (n < 1) {
        throw InputError(head.line, head.column, "dimension must be positive, got " + std::to_string(n));
    }
    s.rows.erase(s.rows.begin());
    if (s.rows.size() != static_cast<std::size_t>(n)) {
        const int line = s.rows.empty() ? head.line : s.rows.back().line;
        throw InputError(line, 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(s.rows.size()));
    }
    return finish(s.rows, s.d, count_lines(text));
}

}  // namespace gwa::cli
