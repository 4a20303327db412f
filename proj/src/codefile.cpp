#include "eaqecc/codefile.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "eaqecc/field.hpp"

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw ParseError("trailing characters in " + what + ": " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot read " + what + " from '" + s + "'");
    }
}

// "key=value" with a fixed expected key
std::string value_of(const std::string& tok, const std::string& key) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) {
        throw ParseError("expected " + key + "=..., got '" + tok + "'");
    }
    return tok.substr(prefix.size());
}

struct Parsed {
    FieldPtr spec;
    Layout layout = Layout::Plain;
    std::size_t half = 0;
    Matrix mat;
};

Parsed parse_body(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.size() < 3) throw ParseError("file needs field, layout, and shape headers");

    auto field_toks = tokens_of(lines[0]);
    if (field_toks.size() < 3 || field_toks[0] != "field") {
        throw ParseError("first line must be 'field p=... m=... [poly=...]'");
    }
    const std::uint64_t p = parse_u64(value_of(field_toks[1], "p"), "p");
    const std::uint64_t m = parse_u64(value_of(field_toks[2], "m"), "m");
    std::optional<std::uint64_t> poly;
    if (field_toks.size() > 3) poly = parse_u64(value_of(field_toks[3], "poly"), "poly");
    if (field_toks.size() > 4) throw ParseError("unexpected tokens on the field line");

    Parsed out;
    try {
        out.spec = FieldSpec::make(static_cast<u32>(p), static_cast<u32>(m), poly);
    } catch (const Error& e) {
        throw ParseError(std::string("bad field header: ") + e.what());
    }

    auto layout_toks = tokens_of(lines[1]);
    const std::string layout_val = value_of(layout_toks[0], "layout");
    if (layout_val == "plain") {
        out.layout = Layout::Plain;
        if (layout_toks.size() > 1) throw ParseError("plain layout takes no n=");
    } else if (layout_val == "symplectic") {
        out.layout = Layout::Symplectic;
        if (layout_toks.size() > 2) throw ParseError("unexpected tokens on the layout line");
        if (layout_toks.size() == 2) {
            out.half = static_cast<std::size_t>(parse_u64(value_of(layout_toks[1], "n"), "n"));
        }
    } else {
        throw ParseError("layout must be plain or symplectic");
    }

    auto shape_toks = tokens_of(lines[2]);
    if (shape_toks.size() != 2) throw ParseError("shape line must be 'rows=r cols=c'");
    const std::size_t rows = static_cast<std::size_t>(parse_u64(value_of(shape_toks[0], "rows"), "rows"));
    const std::size_t cols = static_cast<std::size_t>(parse_u64(value_of(shape_toks[1], "cols"), "cols"));
    if (out.layout == Layout::Symplectic) {
        if (out.half == 0) {
            if (cols % 2 != 0) throw ParseError("symplectic layout needs an even length");
            out.half = cols / 2;
        }
        if (cols != 2 * out.half) throw ParseError("cols does not equal 2n");
    }
    if (lines.size() != 3 + rows) {
        throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 3));
    }

    out.mat = Matrix(out.spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row_toks = tokens_of(lines[3 + i]);
        if (row_toks.size() != cols) {
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(row_toks.size()) + " entries, expected " +
                             std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const std::uint64_t v = parse_u64(row_toks[j], "entry");
            if (v >= out.spec->q()) {
                throw ParseError("entry " + row_toks[j] + " is not a valid encoding below q");
            }
            out.mat.at(i, j) = static_cast<u32>(v);
        }
    }
    return out;
}

}  // namespace

LinearCode read_code(std::istream& in) {
    Parsed p = parse_body(in);
    Subspace s = p.mat.rows == 0 ? Subspace::zero(p.spec, p.mat.cols)
                                 : Subspace::from_rows(p.mat);
    if (p.layout == Layout::Symplectic) return LinearCode::symplectic(std::move(s), p.half);
    return LinearCode::plain(std::move(s));
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_code(in);
}

LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& code) {
    const auto& F = *code.spec();
    out << "field p=" << F.p() << " m=" << F.m() << " poly=" << F.modulus_encoded() << "\n";
    if (code.layout == Layout::Symplectic) {
        out << "layout=symplectic n=" << code.half << "\n";
    } else {
        out << "layout=plain\n";
    }
    out << "rows=" << code.dim() << " cols=" << code.length() << "\n";
    for (std::size_t i = 0; i < code.dim(); ++i) {
        for (std::size_t j = 0; j < code.length(); ++j) {
            if (j) out << ' ';
            out << code.gens.basis.at(i, j);
        }
        out << "\n";
    }
}

std::string format_code(const LinearCode& code) {
    std::ostringstream out;
    write_code(out, code);
    return out.str();
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_body(in).mat;
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_body(in).mat;
}

}  // namespace eaqecc
