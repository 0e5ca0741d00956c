#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "intdecomp/decompose.hpp"
#include "intdecomp/graph.hpp"
#include "intdecomp/hermite.hpp"
#include "intdecomp/matrix.hpp"

namespace intdecomp {

/// Malformed matrix input. line/column are 1-based and refer to the
/// offending token (0 when not applicable, e.g. structured input).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_, column_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A matrix together with where it came from.
struct MatrixDocument {
    enum class Format { plain_text, structured };

    std::string source; // file path, or "-" for standard input
    IntMatrix matrix;
    Format format;
};

/// Plain-text format: header "m n", then m rows of n signed decimal
/// integers; '#' starts a comment running to end of line.
IntMatrix parse_matrix_text(std::string_view text);

/// Structured format: {"rows": m, "cols": n, "entries": [[..], ..]} with
/// entries given as decimal strings or JSON integers.
IntMatrix parse_matrix_json(const nlohmann::json &doc);

/// Reads from a file or, for path "-", from standard input. The format is
/// detected from the first non-whitespace character ('{' means structured).
MatrixDocument load_matrix_document(const std::string &path);

/// Right-aligned plain-text rendering, one matrix row per line.
std::string format_matrix(const IntMatrix &m);
std::string format_matrix(const RatMatrix &m);

std::string format_partition(const ComponentPartition &p);

nlohmann::json matrix_to_json(const IntMatrix &m);
nlohmann::json matrix_to_json(const RatMatrix &m);
IntMatrix matrix_from_json(const nlohmann::json &doc);

nlohmann::json hnf_to_json(const HnfResult &h);

nlohmann::json partition_to_json(const ComponentPartition &p);

/// Serializes the full report: decomposable, rank, pivot_cols, P,
/// P_inverse, Q_vector, blocks, row_partition, column_partition, checks.
nlohmann::json decomposition_to_json(const Decomposition &d, std::size_t rank,
                                     const std::vector<std::size_t> &pivot_cols,
                                     const nlohmann::json &checks);

/// Rebuilds a Decomposition from a structured report, e.g. to re-verify it.
Decomposition decomposition_from_json(const nlohmann::json &doc);

} // namespace intdecomp
