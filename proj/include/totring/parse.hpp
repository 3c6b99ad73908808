#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include <totring/numth.hpp>
#include <totring/ring_spec.hpp>

namespace totring {

// Positioned parse failure for ring expressions.
struct syntax_error : error {
    std::size_t offset;
    syntax_error(const std::string& msg, std::size_t off)
        : error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

namespace detail {

// expr := term ("x" term)*
// term := "Z(" int ")" | "GF(" int ["," int] ")" | "M(" int "," expr ")"
//       | "T(" int "," gf-term ")" | "@" filepath | "(" expr ")"
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    RingSpec parse() {
        RingSpec spec = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw syntax_error("unexpected trailing input", pos_);
        return spec;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw syntax_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::uint64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > kElemLimitParse) throw syntax_error("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw syntax_error("expected integer", pos_);
        return v;
    }

    RingSpec parse_expr() {
        std::vector<RingSpec> factors{parse_term()};
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'X')) {
                ++pos_;
                factors.push_back(parse_term());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors[0]);
        return RingSpec::prod(std::move(factors));
    }

    RingSpec parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) throw syntax_error("expected ring term", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RingSpec inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == '@') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size()) {
                char f = s_[pos_];
                if (std::isspace(static_cast<unsigned char>(f)) || f == ')' || f == ',') break;
                ++pos_;
            }
            if (pos_ == start) throw syntax_error("expected file path after '@'", start);
            return load_table_spec(s_.substr(start, pos_ - start));
        }
        if (c == 'Z' || c == 'z') {
            ++pos_;
            expect('(');
            std::uint64_t n = parse_int();
            expect(')');
            return RingSpec::zn(n);
        }
        if ((c == 'G' || c == 'g') && pos_ + 1 < s_.size() &&
            (s_[pos_ + 1] == 'F' || s_[pos_ + 1] == 'f')) {
            pos_ += 2;
            expect('(');
            std::size_t qoff = pos_;
            std::uint64_t a = parse_int();
            RingSpec out;
            if (peek_is(',')) {
                expect(',');
                std::uint64_t k = parse_int();
                out = RingSpec::gf(a, k); // primality of p deferred to make_ring
            } else {
                auto [p, k] = prime_power(a);
                // non-prime-power shorthand: keep as GF(q,1) so make_ring
                // reports the semantic error
                out = (p != 0) ? RingSpec::gf(p, k) : RingSpec::gf(a, 1);
                (void)qoff;
            }
            expect(')');
            return out;
        }
        if (c == 'M' || c == 'm') {
            ++pos_;
            expect('(');
            std::uint64_t n = parse_int();
            expect(',');
            RingSpec base = parse_expr();
            expect(')');
            return RingSpec::mat(n, std::move(base));
        }
        if (c == 'T' || c == 't') {
            ++pos_;
            expect('(');
            std::uint64_t n = parse_int();
            expect(',');
            skip_ws();
            std::size_t base_off = pos_;
            RingSpec base = parse_term();
            if (base.kind != RingSpec::Kind::GF && base.kind != RingSpec::Kind::Zn)
                throw syntax_error("T(n,F) base must be a field term", base_off);
            expect(')');
            return RingSpec::tri(n, std::move(base));
        }
        throw syntax_error("expected ring term", pos_);
    }

    static constexpr std::uint64_t kElemLimitParse = 1u << 30;

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RingSpec parse_ring_expr(const std::string& text) {
    return detail::ExprParser(text).parse();
}

} // namespace totring
