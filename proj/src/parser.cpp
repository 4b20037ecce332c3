#include "reducta/parser.hpp"

#include <cctype>
#include <sstream>

namespace reducta {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int n;

    explicit Parser(const std::string& s, int nn) : text(s), n(nn) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }
    bool peek_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        // keyword must not continue as an identifier
        size_t end = pos + w.size();
        if (end < text.size() && (std::isalnum((unsigned char)text[end]) || text[end] == '_'))
            return false;
        return true;
    }
    bool eat_word(const std::string& w) {
        if (!peek_word(w)) return false;
        pos += w.size();
        return true;
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)text[start])))
            throw SyntaxError("expected an integer", start);
        return std::stol(text.substr(start, pos - start));
    }
    int index() {
        long v = integer();
        if (v < 1 || v > n) throw IndexOutOfRange(std::to_string(v) + " with n=" + std::to_string(n));
        return (int)v;
    }

    ZElement parse_expr() {
        skip_ws();
        bool neg = eat('-');
        ZElement acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    ZElement parse_term() {
        ZElement acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = acc.free_mul(parse_factor());
            } else if (eat('/')) {
                ZElement d = parse_factor();
                acc = acc.free_mul(invert_scalar(d));
            } else {
                break;
            }
        }
        return acc;
    }

    ZElement invert_scalar(const ZElement& d) {
        if (d.degree() != 0) throw SyntaxError("division by a non-coefficient", pos);
        Coefficient c = d.terms().empty() ? Coefficient::zero(n) : d.terms().begin()->second;
        if (c.is_zero()) throw SyntaxError("division by zero", pos);
        return ZElement(n, c.inverse());
    }

    ZElement parse_factor() {
        ZElement base = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            if (e < 0) throw SyntaxError("negative power", pos);
            ZElement acc(n, Coefficient::one(n));
            for (long k = 0; k < e; ++k) acc = acc.free_mul(base);
            return acc;
        }
        return base;
    }

    ZElement parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
        if (eat('(')) {
            ZElement inner = parse_expr();
            expect(')');
            return inner;
        }
        if (eat_word("comm")) {
            expect('(');
            ZElement a = parse_expr();
            expect(',');
            ZElement b = parse_expr();
            expect(')');
            return a.free_mul(b) - b.free_mul(a);
        }
        if (eat_word("th")) {
            expect('(');
            int i = index();
            if (eat(',')) {
                int j = index();
                expect(')');
                return ZElement(n, Coefficient::theta_diff(n, i, j));
            }
            expect(')');
            return ZElement(n, Coefficient::theta(n, i));
        }
        if (eat_word("tring")) {
            expect('[');
            int i = index();
            expect(']');
            return t_ring(n, i);
        }
        if (eat_word("zhat")) {
            expect('[');
            int i = index();
            expect(',');
            int j = index();
            expect(']');
            return zhat(n, i, j);
        }
        if (eat_word("z")) {
            expect('[');
            int i = index();
            expect(',');
            int j = index();
            expect(']');
            return ZElement::gen(n, {i, j});
        }
        if (eat_word("t")) {
            expect('[');
            int i = index();
            expect(']');
            return ZElement::gen(n, {i, i});
        }
        // rational literal p or p/q
        skip_ws();
        if (std::isdigit((unsigned char)text[pos]) || text[pos] == '-' || text[pos] == '+') {
            long p = integer();
            if (eat('/')) {
                long q = integer();
                if (q == 0) throw SyntaxError("zero denominator", pos);
                return ZElement(n, Coefficient::from_rat(n, rat(p, q)));
            }
            return ZElement(n, Coefficient::from_rat(n, Rat(p)));
        }
        throw SyntaxError("unexpected token", pos);
    }
};

} // namespace

ZElement parse_zelement(const std::string& text, int n) {
    if (n < 1 || n > kMaxVars) throw BadIndex("n out of range");
    Parser p(text, n);
    ZElement e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return e;
}

std::string print_zelement(const ZElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (const GeneratorId& g : w) out << "*" << g.str();
    }
    return out.str();
}

} // namespace reducta
