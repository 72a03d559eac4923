#include "srkex/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <openssl/evp.h>

namespace srkex {

namespace {

// line reader that skips comments/blank lines and tracks line numbers
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw StructuralError("line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const LineReader& r, const std::string& tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) r.fail("expected integer, got '" + tok + "'");
    return v;
}

std::vector<std::uint8_t> parse_table_rows(LineReader& r, int k, int order_limit) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(k) * k);
    std::string line;
    for (int row = 0; row < k; ++row) {
        if (!r.next(line)) r.fail("unexpected end of file inside table");
        const auto toks = tokens(line);
        if (static_cast<int>(toks.size()) != k)
            r.fail("expected " + std::to_string(k) + " entries, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            const int v = parse_int(r, t);
            if (v < 0 || v >= order_limit) r.fail("entry " + t + " out of range");
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

} // namespace

SemiringTable parse_semiring(std::istream& in) {
    LineReader r(in);
    std::string line;
    auto expect = [&](const std::string& keyword) {
        if (!r.next(line)) r.fail("unexpected end of file, expected '" + keyword + "'");
        const auto toks = tokens(line);
        if (toks.empty() || toks[0] != keyword) r.fail("expected '" + keyword + "'");
        return toks;
    };

    SemiringTable t;
    auto header = expect("semiring");
    if (header.size() != 2) r.fail("expected 'semiring <name>'");
    t.name = header[1];

    auto order_line = expect("order");
    if (order_line.size() != 2) r.fail("expected 'order <k>'");
    t.order = parse_int(r, order_line[1]);
    if (t.order < 1 || t.order > 64) r.fail("order out of supported range [1, 64]");

    auto zero_line = expect("zero");
    if (zero_line.size() != 2) r.fail("expected 'zero <idx|none>'");
    if (zero_line[1] != "none") t.zero = parse_int(r, zero_line[1]);

    auto one_line = expect("one");
    if (one_line.size() != 2) r.fail("expected 'one <idx|none>'");
    if (one_line[1] != "none") t.one = parse_int(r, one_line[1]);

    if (expect("add").size() != 1) r.fail("unexpected tokens after 'add'");
    t.add = parse_table_rows(r, t.order, t.order);
    if (expect("mul").size() != 1) r.fail("unexpected tokens after 'mul'");
    t.mul = parse_table_rows(r, t.order, t.order);

    if ((t.zero && (*t.zero < 0 || *t.zero >= t.order)) ||
        (t.one && (*t.one < 0 || *t.one >= t.order)))
        r.fail("zero/one index out of range");
    if (r.next(line)) r.fail("trailing content after tables");
    return t;
}

SemiringTable parse_semiring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return parse_semiring(in);
}

std::string serialize_semiring(const SemiringTable& t) {
    std::ostringstream out;
    out << "semiring " << t.name << "\n";
    out << "order " << t.order << "\n";
    out << "zero " << (t.zero ? std::to_string(*t.zero) : "none") << "\n";
    out << "one " << (t.one ? std::to_string(*t.one) : "none") << "\n";
    for (int which = 0; which < 2; ++which) {
        out << (which == 0 ? "add" : "mul") << "\n";
        const auto& tab = which == 0 ? t.add : t.mul;
        for (int i = 0; i < t.order; ++i) {
            for (int j = 0; j < t.order; ++j)
                out << (j ? " " : "") << static_cast<int>(tab[static_cast<std::size_t>(i) * t.order + j]);
            out << "\n";
        }
    }
    return out.str();
}

SemiringMatrix parse_matrix(std::istream& in, TablePtr table) {
    LineReader r(in);
    std::string line;
    if (!r.next(line) || tokens(line) != std::vector<std::string>{"matrix"})
        r.fail("expected 'matrix' header");
    if (!r.next(line)) r.fail("expected 'semiring <name>'");
    auto sr = tokens(line);
    if (sr.size() != 2 || sr[0] != "semiring") r.fail("expected 'semiring <name>'");
    if (sr[1] != table->name)
        r.fail("matrix is over semiring '" + sr[1] + "', expected '" + table->name + "'");
    if (!r.next(line)) r.fail("expected 'n <n>'");
    auto nl = tokens(line);
    if (nl.size() != 2 || nl[0] != "n") r.fail("expected 'n <n>'");
    const int n = parse_int(r, nl[1]);
    if (n < 1 || n > 1024) r.fail("matrix dimension out of range");

    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
        if (!r.next(line)) r.fail("unexpected end of file inside matrix");
        const auto toks = tokens(line);
        if (static_cast<int>(toks.size()) != n)
            r.fail("expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            const int v = parse_int(r, t);
            if (v < 0 || v >= table->order) r.fail("entry " + t + " out of semiring range");
            entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (r.next(line)) r.fail("trailing content after matrix rows");
    return SemiringMatrix(std::move(table), n, std::move(entries));
}

SemiringMatrix parse_matrix_file(const std::string& path, TablePtr table) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return parse_matrix(in, std::move(table));
}

std::string serialize_matrix(const SemiringMatrix& m) {
    std::ostringstream out;
    out << "matrix\n";
    out << "semiring " << m.table()->name << "\n";
    out << "n " << m.n() << "\n";
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << "\n";
    }
    return out.str();
}

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr);
    return out;
}

std::string hex(std::span<const std::uint8_t> data) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

} // namespace srkex
