#include "kgc/matrix_io.hpp"

#include "kgc/errors.hpp"
#include "kgc/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace kgc {

namespace {

Integer parse_entry(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok))
        throw invalid_input_error(std::string(what) + ": unexpected end of input");
    // cpp_int's string constructor accepts an optional sign and digits; keep
    // the error our own.
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size())
        throw invalid_input_error(std::string(what) + ": bad integer '" + tok + "'");
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw invalid_input_error(std::string(what) + ": bad integer '" + tok + "'");
    return Integer(tok);
}

} // namespace

IntMatrix read_matrix_text(std::istream& in) {
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw invalid_input_error("matrix text: header must be 'rows cols'");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = parse_entry(in, "matrix text");
    return m;
}

void write_matrix_text(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("read failure on '" + path + "'");
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw invalid_input_error("'" + path + "' is empty");
    if (text[first] == '{')
        return matrix_from_json(parse_json(text, path));
    std::istringstream stream(text);
    return read_matrix_text(stream);
}

} // namespace kgc
