#include "intdecomp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace intdecomp {

namespace {

struct Token {
    std::string text;
    std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else {
            Token t{{}, line, col};
            while (i < text.size() && text[i] != '#' &&
                   !std::isspace(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                ++i;
                ++col;
            }
            tokens.push_back(std::move(t));
        }
    }
    return tokens;
}

bool looks_like_integer(const std::string &s) {
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size())
        return false;
    return std::all_of(s.begin() + start, s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

Int token_to_int(const Token &t) {
    if (!looks_like_integer(t.text))
        throw ParseError("malformed token '" + t.text + "'", t.line, t.column);
    // mpz rejects an explicit plus sign.
    return Int(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

std::size_t token_to_dimension(const Token &t, const char *what) {
    Int v = token_to_int(t);
    if (v <= 0 || !v.fits_ulong_p())
        throw ParseError(std::string(what) + " must be a positive integer, got '" +
                             t.text + "'",
                         t.line, t.column);
    return static_cast<std::size_t>(v.get_ui());
}

Int json_entry_to_int(const nlohmann::json &v) {
    if (v.is_string()) {
        const std::string &s = v.get_ref<const std::string &>();
        if (s.empty() || !looks_like_integer(s))
            throw ParseError("malformed entry '" + s + "'", 0, 0);
        return Int(s[0] == '+' ? s.substr(1) : s);
    }
    if (v.is_number_integer()) {
        if (v.is_number_unsigned())
            return Int(std::to_string(v.get<std::uint64_t>()));
        return Int(std::to_string(v.get<std::int64_t>()));
    }
    throw ParseError("matrix entries must be integers or decimal strings", 0, 0);
}

} // namespace

IntMatrix parse_matrix_text(std::string_view text) {
    std::vector<Token> tokens = tokenize(text);
    if (tokens.size() < 2)
        throw ParseError("expected a dimension header 'm n'", 1, 1);
    std::size_t rows = token_to_dimension(tokens[0], "row count");
    std::size_t cols = token_to_dimension(tokens[1], "column count");
    if (tokens.size() < 2 + rows * cols) {
        const Token &last = tokens.back();
        throw ParseError("expected " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(tokens.size() - 2),
                         last.line, last.column);
    }
    if (tokens.size() > 2 + rows * cols) {
        const Token &extra = tokens[2 + rows * cols];
        throw ParseError("trailing content '" + extra.text + "'", extra.line,
                         extra.column);
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = token_to_int(tokens[2 + i * cols + j]);
    return m;
}

IntMatrix parse_matrix_json(const nlohmann::json &doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw ParseError("structured matrix needs rows, cols and entries", 0, 0);
    std::size_t rows = doc["rows"].get<std::size_t>();
    std::size_t cols = doc["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0)
        throw ParseError("dimensions must be positive", 0, 0);
    const nlohmann::json &entries = doc["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must hold one array per row", 0, 0);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw ParseError("row " + std::to_string(i + 1) +
                                 " does not match the declared column count",
                             0, 0);
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = json_entry_to_int(entries[i][j]);
    }
    return m;
}

MatrixDocument load_matrix_document(const std::string &path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad())
            throw IoError("cannot read '" + path + "'");
        text = buf.str();
    }

    auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) {
        return !std::isspace(c);
    });
    if (first != text.end() && *first == '{') {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded())
            throw ParseError("invalid structured document", 0, 0);
        return MatrixDocument{path, parse_matrix_json(doc),
                              MatrixDocument::Format::structured};
    }
    return MatrixDocument{path, parse_matrix_text(text),
                          MatrixDocument::Format::plain_text};
}

namespace {

template <typename Matrix, typename ToString>
std::string format_matrix_impl(const Matrix &m, ToString to_string) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            width = std::max(width, to_string(m(i, j)).size());
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = to_string(m(i, j));
            if (j)
                out += ' ';
            out.append(width - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string format_matrix(const IntMatrix &m) {
    return format_matrix_impl(m, [](const Int &v) { return v.get_str(); });
}

std::string format_matrix(const RatMatrix &m) {
    return format_matrix_impl(m, [](const Rat &v) { return v.get_str(); });
}

std::string format_partition(const ComponentPartition &p) {
    std::string out;
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        if (k)
            out += ' ';
        out += '{';
        for (std::size_t i = 0; i < p.components[k].size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(p.components[k][i]);
        }
        out += '}';
    }
    return out;
}

nlohmann::json matrix_to_json(const IntMatrix &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).get_str());
        entries.push_back(std::move(row));
    }
    return nlohmann::json{
        {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json matrix_to_json(const RatMatrix &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).get_str());
        entries.push_back(std::move(row));
    }
    return nlohmann::json{
        {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const nlohmann::json &doc) {
    return parse_matrix_json(doc);
}

nlohmann::json hnf_to_json(const HnfResult &h) {
    nlohmann::json pivots = nlohmann::json::array();
    for (std::size_t c : h.pivot_cols)
        pivots.push_back(c + 1);
    return nlohmann::json{{"rank", h.rank},
                          {"pivot_cols", std::move(pivots)},
                          {"H", matrix_to_json(h.h)},
                          {"P", matrix_to_json(h.p)},
                          {"P_inverse", matrix_to_json(h.p_inverse)}};
}

nlohmann::json partition_to_json(const ComponentPartition &p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &comp : p.components)
        out.push_back(comp);
    return out;
}

nlohmann::json decomposition_to_json(const Decomposition &d, std::size_t rank,
                                     const std::vector<std::size_t> &pivot_cols,
                                     const nlohmann::json &checks) {
    nlohmann::json pivots = nlohmann::json::array();
    for (std::size_t c : pivot_cols)
        pivots.push_back(c + 1);
    nlohmann::json blocks = nlohmann::json::array();
    for (const IntMatrix &b : d.blocks)
        blocks.push_back(matrix_to_json(b));
    nlohmann::json row_partition = nlohmann::json::array();
    for (const auto &rows : d.row_partition)
        row_partition.push_back(rows);
    return nlohmann::json{{"decomposable", d.decomposable},
                          {"rank", rank},
                          {"pivot_cols", std::move(pivots)},
                          {"P", matrix_to_json(d.p)},
                          {"P_inverse", matrix_to_json(d.p_inverse)},
                          {"Q_vector", d.q.one_based()},
                          {"blocks", std::move(blocks)},
                          {"row_partition", std::move(row_partition)},
                          {"column_partition",
                           partition_to_json(d.column_partition)},
                          {"checks", checks}};
}

Decomposition decomposition_from_json(const nlohmann::json &doc) {
    std::vector<IntMatrix> blocks;
    for (const nlohmann::json &b : doc.at("blocks"))
        blocks.push_back(matrix_from_json(b));
    std::vector<std::vector<std::size_t>> row_partition;
    for (const nlohmann::json &rows : doc.at("row_partition"))
        row_partition.push_back(rows.get<std::vector<std::size_t>>());
    ComponentPartition column_partition;
    for (const nlohmann::json &comp : doc.at("column_partition"))
        column_partition.components.push_back(
            comp.get<std::vector<std::size_t>>());
    return Decomposition{
        matrix_from_json(doc.at("P")),
        matrix_from_json(doc.at("P_inverse")),
        Permutation::from_one_based(
            doc.at("Q_vector").get<std::vector<std::size_t>>()),
        std::move(blocks),
        std::move(row_partition),
        std::move(column_partition),
        doc.at("decomposable").get<bool>(),
        std::nullopt};
}

} // namespace intdecomp
