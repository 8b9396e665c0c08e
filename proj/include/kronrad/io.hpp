#pragma once

#include <cctype>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronrad/complex_matrix.hpp"

namespace kronrad {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// One scalar in "a+bi" shorthand: real part, imaginary part, or both, with
/// "i"/"j" suffix; e.g. "2", "-3i", "1.5+2i", "1-0.5j".
inline cplx parse_scalar(const std::string& tok, std::size_t row, std::size_t col) {
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "bad entry '" << tok << "' at row " << row + 1 << ", column " << col + 1 << ": "
           << why;
        throw parse_error(os.str());
    };
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    bool saw_real = false, saw_imag = false;
    while (pos < tok.size()) {
        const std::size_t start = pos;
        if (tok[pos] == '+' || tok[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[pos])) ||
                                    tok[pos] == '.' || tok[pos] == 'e' || tok[pos] == 'E' ||
                                    ((tok[pos] == '+' || tok[pos] == '-') &&
                                     (tok[pos - 1] == 'e' || tok[pos - 1] == 'E'))))
            ++pos;
        const bool imag_unit = pos < tok.size() && (tok[pos] == 'i' || tok[pos] == 'j');
        std::string num = tok.substr(start, pos - start);
        if (digits == pos) {
            // bare "i", "+i", "-i"
            if (!imag_unit) fail("expected a number");
            num += "1";
        }
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(num, &used);
            if (used != num.size()) fail("trailing characters in number");
        } catch (const std::exception&) {
            fail("not a number");
        }
        if (imag_unit) {
            if (saw_imag) fail("two imaginary parts");
            im = value;
            saw_imag = true;
            ++pos;
        } else {
            if (saw_real) fail("two real parts");
            re = value;
            saw_real = true;
        }
    }
    if (!saw_real && !saw_imag) fail("empty entry");
    if (!std::isfinite(re) || !std::isfinite(im)) fail("entry is not finite");
    return {re, im};
}

inline CMatrix parse_shorthand(const std::string& text) {
    // rows split on '/' or newlines, entries split on blanks
    std::vector<std::vector<cplx>> rows;
    std::string body = text;
    for (char& ch : body)
        if (ch == '/') ch = '\n';
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<cplx> row;
        std::string tok;
        while (toks >> tok) row.push_back(parse_scalar(tok, rows.size(), row.size()));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("no matrix entries found");
    const std::size_t cols = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols) {
            std::ostringstream os;
            os << "row " << i + 1 << " has " << rows[i].size() << " entries, expected " << cols;
            throw parse_error(os.str());
        }
    CMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace detail

/// Accepts either the JSON form {"rows":n,"cols":m,"data":[[[re,im],...],...]}
/// or the shorthand "a+bi ..." rows separated by '/' or newlines.
inline CMatrix parse_matrix(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty input");
    if (text[first] != '{') return detail::parse_shorthand(text);

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw parse_error("JSON matrix needs \"rows\", \"cols\" and \"data\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw parse_error("\"rows\" and \"cols\" must be non-negative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw parse_error("\"data\" must be an array of " + std::to_string(rows) + " rows");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = data[i];
        if (!row.is_array() || row.size() != cols) {
            std::ostringstream os;
            os << "row " << i + 1 << " must be an array of " << cols << " [re, im] pairs";
            throw parse_error(os.str());
        }
        for (std::size_t jj = 0; jj < cols; ++jj) {
            const auto& cell = row[jj];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                std::ostringstream os;
                os << "entry at row " << i + 1 << ", column " << jj + 1
                   << " must be a [re, im] number pair";
                throw parse_error(os.str());
            }
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) {
                std::ostringstream os;
                os << "entry at row " << i + 1 << ", column " << jj + 1 << " is not finite";
                throw parse_error(os.str());
            }
            m(i, jj) = {re, im};
        }
    }
    return m;
}

/// Canonical JSON emission; parse(emit(M)) reproduces M bit-exactly since the
/// serializer prints shortest round-trip doubles.
inline std::string emit_matrix(const CMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            row.push_back({m(i, jj).real(), m(i, jj).imag()});
        data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
    return j.dump();
}

/// Coefficient list a_0 .. a_{n-1} of a monic polynomial, one scalar per
/// whitespace-separated token (same "a+bi" shorthand), or a JSON array of
/// [re, im] pairs.
inline Poly parse_poly(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty input");
    std::vector<cplx> coeffs;
    if (text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_array()) throw parse_error("expected a JSON array of [re, im] pairs");
        for (std::size_t k = 0; k < j.size(); ++k) {
            const auto& cell = j[k];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw parse_error("coefficient " + std::to_string(k + 1) +
                                  " must be a [re, im] pair");
            coeffs.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    } else {
        std::istringstream toks(text);
        std::string tok;
        while (toks >> tok) coeffs.push_back(detail::parse_scalar(tok, 0, coeffs.size()));
    }
    for (const cplx& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw parse_error("coefficient is not finite");
    return Poly(std::move(coeffs));
}

} // namespace kronrad
