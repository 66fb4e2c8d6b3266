#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieforge/characters.hpp"

namespace lieforge {

/// "A2", "B4", "C3", "D8", optionally suffixed "+u1" or "+sp1"; throws ParseError.
DatumPtr parse_datum(const std::string& text);

/*
 * Representation expression over a datum:
 *   expr  := (op ':')* base
 *   op    := ext<k> | sym<k> | dual | zero
 *   base  := standard | vector | spin | halfspin+ | halfspin- | adjoint | trivial | hw=c1,c2,...
 * "zero" removes one trivial summand, hw= takes rational coordinates. Throws ParseError.
 */
Character parse_rep(const DatumPtr& datum, const std::string& text);

enum class TableCheck { TrivialL4, NormL2, NormL2Traceless };

const char* check_name(TableCheck c);

struct TableRow {
    std::string theorem;  ///< "3.1", "3.3" or "3.5"
    std::string type;     ///< symmetric space type label
    std::string h;
    std::string m;
    bool exceptional = false;
    std::string datum;  ///< instance used for the check (empty for exceptional rows)
    std::string rep;
    TableCheck check = TableCheck::TrivialL4;
    std::int64_t expected = 0;
};

const std::vector<TableRow>& table_rows();

struct TableResult {
    TableRow row;
    bool skipped = false;
    std::optional<std::int64_t> value;
    bool passed = false;
    double seconds = 0;
    std::string note;
};

TableResult evaluate_row(const TableRow& row, unsigned jobs = 1);

/// Evaluates every row with a classical h; exceptional rows are reported as skipped.
std::vector<TableResult> verify_tables(unsigned jobs = 1, const std::string& theorem_filter = "");

}  // namespace lieforge
