#include "lieforge/tables.hpp"

#include <chrono>
#include <regex>

#include "lieforge/error.hpp"

namespace lieforge {

DatumPtr parse_datum(const std::string& text) {
    static const std::regex re(R"(([ABCD])(\d+)(\+u1|\+sp1)?)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw Error(ErrorCode::ParseError, "bad root datum '" + text + "'");
    Family f = static_cast<Family>(m[1].str()[0] - 'A');
    std::size_t rank = std::stoul(m[2].str());
    Extension ext = Extension::None;
    if (m[3] == "+u1") ext = Extension::U1;
    if (m[3] == "+sp1") ext = Extension::Sp1;
    if (rank == 0 || rank > 16 || (f == Family::D && rank < 2))
        throw Error(ErrorCode::ParseError, "unsupported rank in '" + text + "'");
    return make_datum(f, rank, ext);
}

namespace {

Character parse_base(const DatumPtr& d, const std::string& base) {
    try {
        if (base == "standard" || base == "vector") return standard_char(d);
        if (base == "spin") return spin_char(d, Chirality::Full);
        if (base == "halfspin+") return spin_char(d, Chirality::Plus);
        if (base == "halfspin-") return spin_char(d, Chirality::Minus);
        if (base == "adjoint") return adjoint_char(d);
        if (base == "trivial") return trivial_char(d);
        if (base.rfind("hw=", 0) == 0) {
            std::vector<Rational> coords;
            std::string rest = base.substr(3);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                std::size_t comma = rest.find(',', pos);
                if (comma == std::string::npos) comma = rest.size();
                coords.push_back(Rational::parse(rest.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            Weight w = d->weight(coords);
            if (!d->is_dominant(w)) throw Error(ErrorCode::ParseError, "highest weight is not dominant: " + base);
            return irreducible_char(d, w);
        }
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, std::string(e.what()) + " in '" + base + "'");
    }
    throw Error(ErrorCode::ParseError, "unknown representation '" + base + "'");
}

}  // namespace

Character parse_rep(const DatumPtr& d, const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    Character ch = parse_base(d, parts.back());
    static const std::regex power(R"((ext|sym)(\d+))");
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        const std::string& op = parts[i];
        std::smatch m;
        if (std::regex_match(op, m, power)) {
            std::size_t k = std::stoul(m[2].str());
            ch = m[1] == "ext" ? ext_power_char(ch, k) : sym_power_char(ch, k);
        } else if (op == "dual") {
            ch = dual_char(ch);
        } else if (op == "zero") {
            ch -= trivial_char(d);
        } else {
            throw Error(ErrorCode::ParseError, "unknown operation '" + op + "'");
        }
    }
    return ch;
}

const char* check_name(TableCheck c) {
    switch (c) {
        case TableCheck::TrivialL4: return "trivial-mult(L4)";
        case TableCheck::NormL2: return "norm2(L2)";
        case TableCheck::NormL2Traceless: return "norm2(L2_0)";
    }
    return "?";
}

const std::vector<TableRow>& table_rows() {
    using C = TableCheck;
    static const std::vector<TableRow> rows = {
        {"3.1", "(adjoint)", "h", "h", false, "A2", "adjoint", C::TrivialL4, 0},
        {"3.1", "BD I", "so(n), n != 4", "R^n", false, "B2", "vector", C::TrivialL4, 0},
        {"3.1", "A I", "so(n), n != 4", "Sym^2_0 R^n", false, "B2", "hw=2,0", C::TrivialL4, 0},
        {"3.1", "A II", "sp(n)", "Lambda^2_0 H^n", false, "C2", "hw=1,1", C::TrivialL4, 0},
        {"3.1", "F II", "spin(9)", "Sigma_9", false, "B4", "spin", C::TrivialL4, 0},
        {"3.1", "E I", "sp(4)", "Lambda^4_0 H^4", false, "C4", "hw=1,1,1,1", C::TrivialL4, 0},
        {"3.1", "E IV", "F4", "V26", true, "", "", C::TrivialL4, 0},
        {"3.1", "E V", "su(8)", "[Lambda^4 C^8]", false, "A7", "hw=1,1,1,1,0,0,0,0", C::TrivialL4, 0},
        {"3.1", "E VIII", "spin(16)", "Sigma^+_16", false, "D8", "halfspin+", C::TrivialL4, 0},
        {"3.3", "A III", "su(n)", "C^n", false, "A2", "standard", C::NormL2, 1},
        {"3.3", "D III", "su(n)", "Lambda^2 C^n", false, "A4", "hw=1,1,0,0,0", C::NormL2, 1},
        {"3.3", "C I", "su(n)", "Sym^2 C^n", false, "A2", "hw=2,0,0", C::NormL2, 1},
        {"3.3", "BD I", "so(n), n != 4", "R^n (x) C", false, "B2", "vector", C::NormL2, 1},
        {"3.3", "E III", "spin(10)", "Sigma_10", false, "D5", "halfspin+", C::NormL2, 1},
        {"3.3", "E VII", "E6", "V27", true, "", "", C::NormL2, 1},
        {"3.5", "C II", "sp(n)", "H^n", false, "C2", "standard", C::NormL2Traceless, 1},
        {"3.5", "F I", "sp(3)", "Lambda^3_0 H^3", false, "C3", "hw=1,1,1", C::NormL2Traceless, 1},
        {"3.5", "G I", "sp(1)", "Sym^3 H", false, "C1", "hw=3", C::NormL2Traceless, 1},
        {"3.5", "E II", "su(6)", "Lambda^3 C^6", false, "A5", "hw=1,1,1,0,0,0", C::NormL2Traceless, 1},
        {"3.5", "E VI", "spin(12)", "Sigma^+_12", false, "D6", "halfspin+", C::NormL2Traceless, 1},
        {"3.5", "E IX", "E7", "V56", true, "", "", C::NormL2Traceless, 1},
    };
    return rows;
}

TableResult evaluate_row(const TableRow& row, unsigned jobs) {
    TableResult r;
    r.row = row;
    if (row.exceptional) {
        r.skipped = true;
        r.note = "exceptional h: no classical character model";
        return r;
    }
    auto start = std::chrono::steady_clock::now();
    DatumPtr d = parse_datum(row.datum);
    Character m = parse_rep(d, row.rep);
    switch (row.check) {
        case TableCheck::TrivialL4: r.value = trivial_multiplicity(ext_power_char(m, 4), jobs); break;
        case TableCheck::NormL2: r.value = irreducibility_norm(ext_power_char(m, 2)); break;
        case TableCheck::NormL2Traceless: {
            Character l2 = ext_power_char(m, 2);
            l2 -= trivial_char(d);
            r.value = irreducibility_norm(l2);
            break;
        }
    }
    r.passed = *r.value == row.expected;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.note = "dim m = " + std::to_string(m.dim());
    return r;
}

std::vector<TableResult> verify_tables(unsigned jobs, const std::string& theorem_filter) {
    std::vector<TableResult> out;
    for (const auto& row : table_rows())
        if (theorem_filter.empty() || row.theorem == theorem_filter) out.push_back(evaluate_row(row, jobs));
    return out;
}

}  // namespace lieforge
