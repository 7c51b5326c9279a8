#include "mobius/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace mobius {

namespace {

bool parse_complex(const std::string& token, Complex* out) {
    const auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) return false;
    std::size_t used = 0;
    double re = 0.0, im = 0.0;
    try {
        re = std::stod(token.substr(0, colon), &used);
        if (used != colon) return false;
        const std::string imag_part = token.substr(colon + 1);
        im = std::stod(imag_part, &used);
        if (used != imag_part.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    *out = Complex(re, im);
    return true;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw MatrixParseError("missing dimension line", 1);
    ++line_no;
    int dim = 0;
    {
        std::istringstream head(line);
        if (!(head >> dim) || dim < 1)
            throw MatrixParseError("dimension line must hold a positive integer", line_no);
        std::string rest;
        if (head >> rest) throw MatrixParseError("trailing content after dimension", line_no);
    }

    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (!std::getline(in, line))
            throw MatrixParseError("unexpected end of file: expected " + std::to_string(dim) +
                                       " rows",
                                   line_no + 1);
        ++line_no;
        std::istringstream row(line);
        std::string token;
        for (int j = 0; j < dim; ++j) {
            if (!(row >> token))
                throw MatrixParseError("row " + std::to_string(i + 1) + " has fewer than " +
                                           std::to_string(dim) + " entries",
                                       line_no);
            Complex value;
            if (!parse_complex(token, &value))
                throw MatrixParseError("bad entry '" + token + "' (expected re:im)", line_no);
            m(i, j) = value;
        }
        std::string extra;
        if (row >> extra)
            throw MatrixParseError("row " + std::to_string(i + 1) + " has more than " +
                                       std::to_string(dim) + " entries",
                                   line_no);
    }
    if (!m.allFinite()) throw MatrixParseError("matrix contains non-finite entries", line_no);
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << "\n";
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g:%.17g", m(i, j).real(), m(i, j).imag());
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
}

}  // namespace mobius
