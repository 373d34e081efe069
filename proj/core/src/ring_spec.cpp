#include "heisenrig/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace heisenrig {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        advance();
        return c;
    }

    void expect(char c) {
        char got = peek();
        if (got != c) fail(std::string("expected '") + c + "'");
        advance_checked();
    }

    bool try_consume(char c) {
        if (peek() == c) {
            advance_checked();
            return true;
        }
        return false;
    }

    std::uint64_t read_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10) fail("integer literal too large");
            value = value * 10 + digit;
            advance();
        }
        return value;
    }

    std::string read_ident() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail("expected an identifier");
        std::string s;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    /// Reads a literal keyword like "p=" (whitespace allowed around it).
    bool try_keyword(const std::string& kw) {
        skip_ws();
        std::size_t save = pos_, sl = line_, sc = col_;
        for (char c : kw) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != c) {
                pos_ = save;
                line_ = sl;
                col_ = sc;
                return false;
            }
            advance();
        }
        return true;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance_checked() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        advance();
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::vector<std::uint64_t> parse_poly(Cursor& cur, const std::string& var, std::uint64_t p) {
    // Terms: c | c var | c var ^ k | var | var ^ k, "+"-separated.
    std::vector<std::uint64_t> coeffs;
    auto bump = [&](std::size_t deg, std::uint64_t c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = (coeffs[deg] + c % p) % p;
    };
    while (true) {
        std::uint64_t c = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = cur.read_uint();
            saw_coeff = true;
        }
        std::size_t deg = 0;
        if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            std::string id = cur.read_ident();
            if (id != var) cur.fail("unknown indeterminate '" + id + "', expected '" + var + "'");
            deg = 1;
            if (cur.try_consume('^')) {
                deg = static_cast<std::size_t>(cur.read_uint());
                if (deg == 0) cur.fail("exponent 0 not allowed; write the constant instead");
            }
        } else if (!saw_coeff) {
            cur.fail("expected a polynomial term");
        }
        bump(deg, c);
        if (!cur.try_consume('+')) break;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

RingAtom parse_atom(Cursor& cur) {
    char c = cur.peek();
    if (c == 'Z') {
        cur.expect('Z');
        cur.expect('/');
        std::uint64_t m = cur.read_uint();
        if (m < 2) cur.fail("modulus below 2");
        return ModularNode{m};
    }
    if (c == 'F') {
        cur.expect('F');
        std::uint64_t p = cur.read_uint();
        if (!is_prime_u64(p)) cur.fail("characteristic " + std::to_string(p) + " is not prime");
        cur.expect('[');
        std::string var = cur.read_ident();
        cur.expect(']');
        cur.expect('/');
        cur.expect('(');
        std::vector<std::uint64_t> poly = parse_poly(cur, var, p);
        cur.expect(')');
        if (poly.size() < 2) cur.fail("quotient polynomial must have degree >= 1");
        if (poly.back() != 1) cur.fail("quotient polynomial must be monic");
        return QuotientNode{p, var, std::move(poly)};
    }
    if (c == 't') {
        if (!cur.try_keyword("table{")) cur.fail("expected a ring atom");
        if (!cur.try_keyword("p=")) cur.fail("expected 'p='");
        std::uint64_t p = cur.read_uint();
        if (!is_prime_u64(p)) cur.fail("table characteristic " + std::to_string(p) + " is not prime");
        cur.expect(';');
        if (!cur.try_keyword("rank=")) cur.fail("expected 'rank='");
        std::uint64_t rank = cur.read_uint();
        if (rank == 0) cur.fail("table rank must be >= 1");
        cur.expect(';');
        if (!cur.try_keyword("mul=")) cur.fail("expected 'mul='");
        std::vector<std::vector<std::vector<std::uint64_t>>> mul;
        for (std::size_t i = 0; i < rank; ++i) {
            std::vector<std::vector<std::uint64_t>> row;
            for (std::size_t j = 0; j < rank; ++j) {
                cur.expect('[');
                std::vector<std::uint64_t> coords;
                for (std::size_t k = 0; k < rank; ++k) {
                    std::uint64_t v = cur.read_uint();
                    if (v >= p) cur.fail("table coordinate must be < p");
                    coords.push_back(v);
                    if (k + 1 < rank) cur.expect(',');
                }
                cur.expect(']');
                row.push_back(std::move(coords));
                if (j + 1 < rank) cur.expect(',');
            }
            mul.push_back(std::move(row));
            if (i + 1 < rank) cur.expect(';');
        }
        cur.expect('}');
        return TableNode{p, static_cast<std::size_t>(rank), std::move(mul)};
    }
    cur.fail("expected a ring atom ('Z/..', 'F..[..]/(..)' or 'table{..}')");
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
    Cursor cur(text);
    RingSpec spec;
    spec.factors.push_back(parse_atom(cur));
    while (cur.try_consume('x')) spec.factors.push_back(parse_atom(cur));
    if (!cur.at_end()) cur.fail("trailing input after ring spec");
    return spec;
}

namespace {

std::string print_poly(const QuotientNode& node) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = node.poly.size(); d-- > 0;) {
        std::uint64_t c = node.poly[d];
        if (c == 0) continue;
        if (!first) out << "+";
        first = false;
        if (d == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << node.var;
            if (d > 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string print_atom(const RingAtom& atom) {
    std::ostringstream out;
    if (const auto* z = std::get_if<ModularNode>(&atom)) {
        out << "Z/" << z->modulus;
    } else if (const auto* q = std::get_if<QuotientNode>(&atom)) {
        out << "F" << q->p << "[" << q->var << "]/(" << print_poly(*q) << ")";
    } else {
        const auto& t = std::get<TableNode>(atom);
        out << "table{p=" << t.p << ";rank=" << t.rank << ";mul=";
        for (std::size_t i = 0; i < t.rank; ++i) {
            if (i) out << ";";
            for (std::size_t j = 0; j < t.rank; ++j) {
                if (j) out << ",";
                out << "[";
                for (std::size_t k = 0; k < t.rank; ++k) {
                    if (k) out << ",";
                    out << t.mul[i][j][k];
                }
                out << "]";
            }
        }
        out << "}";
    }
    return out.str();
}

}  // namespace

std::string print_ring_spec(const RingSpec& spec) {
    std::ostringstream out;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out << " x ";
        out << print_atom(spec.factors[i]);
    }
    return out.str();
}

bool operator==(const ModularNode& a, const ModularNode& b) { return a.modulus == b.modulus; }
bool operator==(const QuotientNode& a, const QuotientNode& b) {
    return a.p == b.p && a.var == b.var && a.poly == b.poly;
}
bool operator==(const TableNode& a, const TableNode& b) {
    return a.p == b.p && a.rank == b.rank && a.mul == b.mul;
}
bool operator==(const RingSpec& a, const RingSpec& b) { return a.factors == b.factors; }

}  // namespace heisenrig
